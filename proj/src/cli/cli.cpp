#include "qcalc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cli_internal.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qburgers.hpp"
#include "qcalc/qhermite.hpp"
#include "qcalc/qschrodinger.hpp"
#include "qcalc/qspecial.hpp"

namespace qcalc {
namespace {

using cli::Json;
using cli::RunConfig;

// Arguments accepted by `eval`, by function.
const std::map<std::string, std::set<std::string>>& eval_arity() {
  static const std::map<std::string, std::set<std::string>> table{
      {"e_q", {"x"}},        {"sinh_q", {"x"}},           {"cosh_q", {"x"}},     {"tanh_q", {"x"}},
      {"ln_q", {"z"}},       {"hermite", {"N", "x"}},     {"kdf", {"N", "x", "t"}},
      {"shock", {"k", "x", "t"}}, {"psi", {"p", "x", "t"}},
  };
  return table;
}

struct EvalArgs {
  std::string function;
  std::map<std::string, std::string> given;  // flag name -> raw text
  std::vector<std::string> k;
};

struct EvalResult {
  std::string value;
  bool exact = false;
  std::optional<unsigned> terms_used;
  std::optional<int> cancellation_digits;
};

std::string real_text(const Real& v, int digits) { return v.is_zero() ? "0" : v.to_string(digits); }

// Exact value if every input is rational, otherwise nullopt.
std::optional<BigRational> try_rational(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

EvalResult run_eval(const EvalArgs& a, const RunConfig& cfg) {
  const auto it = eval_arity().find(a.function);
  if (it == eval_arity().end()) {
    std::string names;
    for (const auto& [name, _] : eval_arity()) names += (names.empty() ? "" : ", ") + name;
    throw DomainError("unknown function '" + a.function + "' (expected one of " + names + ")");
  }
  const std::set<std::string>& need = it->second;
  for (const auto& n : need) {
    if (!a.given.count(n)) throw ArityError("eval " + a.function + " needs --" + n);
  }
  for (const auto& [n, _] : a.given) {
    if (!need.count(n) && !(a.function == "shock" && n == "offset")) {
      throw ArityError("eval " + a.function + " does not take --" + n);
    }
  }

  const unsigned bits = cfg.bits;
  const int digits = decimal_digits(bits);
  const QBase& q = cfg.q;
  auto real_arg = [&](const std::string& n) { return Real::parse(a.given.at(n), bits); };
  auto order = [&]() -> unsigned {
    const auto n = try_rational(a.given.at("N"));
    if (!n || n->get_den() != 1 || *n < 0 || *n > 100000) throw DomainError("--N must be a non-negative integer");
    return static_cast<unsigned>(n->get_num().get_ui());
  };

  EvalResult r;
  const std::string& f = a.function;
  if (f == "e_q") {
    const QSeriesEval<Real> e = e_q(real_arg("x"), q);
    r.value = real_text(e.value, digits);
    r.terms_used = e.terms_used;
    r.cancellation_digits = e.cancellation_digits;
  } else if (f == "sinh_q" || f == "cosh_q") {
    const QEvenOdd<Real> parts = e_q_parts(real_arg("x"), q);
    const QSeriesEval<Real>& e = f == "sinh_q" ? parts.odd : parts.even;
    r.value = real_text(e.value, digits);
    r.terms_used = e.terms_used;
    r.cancellation_digits = e.cancellation_digits;
  } else if (f == "tanh_q") {
    const QEvenOdd<Real> parts = e_q_parts(real_arg("x"), q);
    if (parts.even.value.is_zero()) throw PoleError("tanh_q: cosh_q vanishes", a.given.at("x"), a.given.at("x"));
    r.value = real_text(parts.odd.value / parts.even.value, digits);
    r.terms_used = std::max(parts.odd.terms_used, parts.even.terms_used);
    r.cancellation_digits = std::max(parts.odd.cancellation_digits, parts.even.cancellation_digits);
  } else if (f == "ln_q") {
    const QSeriesEval<Real> e = ln_q(real_arg("z"), q);
    r.value = real_text(e.value, digits);
    r.terms_used = e.terms_used;
    r.cancellation_digits = e.cancellation_digits;
  } else if (f == "hermite" || f == "kdf") {
    const unsigned n = order();
    const BiQPoly p = f == "hermite" ? BiQPoly(hermite_explicit(n, q)) : kdf_explicit(n, q);
    const auto x = try_rational(a.given.at("x"));
    const auto t = f == "kdf" ? try_rational(a.given.at("t")) : std::optional<BigRational>(BigRational(0));
    if (x && t) {
      r.value = to_string(p.at_s(BigRational(cfg.nu * *t)).eval(*x));
      r.exact = true;
    } else {
      const Real s = f == "kdf" ? cfg.nu_real() * real_arg("t") : Real::zero(bits);
      r.value = real_text(p.eval_at(real_arg("x"), s), digits);
    }
  } else if (f == "shock") {
    if (a.k.empty()) throw ArityError("eval shock needs at least one wave number in --k");
    const Real one(1L, bits);
    ShockSpec<Real> spec{a.given.count("offset") ? real_arg("offset") : Real::zero(bits), {}, q, cfg.nu_real()};
    for (const auto& k : a.k) spec.terms.push_back({one, Real::parse(k, bits)});
    r.value = real_text(shock_multi(spec)(real_arg("x"), real_arg("t")), digits);
  } else {  // psi
    const QuantumParams params{cfg.hbar, cfg.mass, q};
    const Complex v = schrodinger_plane_wave(real_arg("p"), params).value(real_arg("x"), real_arg("t"));
    r.value = Complex(Real::parse(real_text(v.real(), digits), bits), Real::parse(real_text(v.imag(), digits), bits))
                  .to_string(digits);
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    cli::write_atomically(cfg.out, content);
  }
}

// --- figures -------------------------------------------------------------

struct FigureSpec {
  std::string caption;
  bool four_wave;
  long t;
};

const std::map<std::string, FigureSpec>& figures() {
  static const std::map<std::string, FigureSpec> table{
      {"fig1", {"q-shock evolution, nu=1, k=1,-1, offset 10, t=-2", false, -2}},
      {"fig2", {"q-shock evolution, nu=1, k=1,-1, offset 10, t=0", false, 0}},
      {"fig3", {"q-shock evolution, nu=1, k=1,-1, offset 10, t=5", false, 5}},
      {"fig4", {"q-multi shock evolution, nu=1, k=1,-1,2,-2, t=-10", true, -10}},
      {"fig5", {"q-multi shock evolution, nu=1, k=1,-1,2,-2, t=0", true, 0}},
      {"fig6", {"q-multi shock evolution, nu=1, k=1,-1,2,-2, t=7", true, 7}},
  };
  return table;
}

}  // namespace

std::string figure_csv(const std::string& id, unsigned bits) {
  const auto it = figures().find(id);
  if (it == figures().end()) throw DomainError("unknown figure '" + id + "' (expected fig1..fig6)");
  const FigureSpec& fig = it->second;
  const QBase q = QBase::exact(10);
  const Real nu(1L, bits), one(1L, bits);
  const ShockSpec<Real> spec = fig.four_wave ? four_wave_spec(q, nu)
                                             : ShockSpec<Real>{Real(10L, bits), {{one, one}, {one, -one}}, q, nu};
  const VelocityField<Real> u = shock_multi(spec);
  const Real t(fig.t, bits);
  const int digits = decimal_digits(bits);
  std::string csv = "x,u\n";
  for (long i = 0; i <= 2000; ++i) {
    const std::string xs = cli::fixed2(5 * (i - 1000));
    csv += xs + "," + real_text(u(Real::parse(xs, bits), t), digits) + "\n";
  }
  return csv;
}

std::string figure_caption(const std::string& id) {
  const auto it = figures().find(id);
  if (it == figures().end()) throw DomainError("unknown figure '" + id + "' (expected fig1..fig6)");
  return it->second.caption;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arbitrary-precision q-calculus: q-Hermite and q-Kampe-de Feriet polynomials, q-heat, "
               "q-Burgers and q-Schrodinger solutions.",
               "qcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("QCALC_PRECISION_BITS")) {
    try {
      const long b = std::stol(env);
      if (b < 0) throw std::invalid_argument("negative");
      cfg.bits = static_cast<unsigned>(b);
    } catch (const std::exception&) {
      err << "error: QCALC_PRECISION_BITS must be an integer, got '" << env << "'\n";
      return kExitUsage;
    }
  }
  app.add_option("--q", cfg.q_text, "Base q >= 1, decimal or a/b")->capture_default_str();
  app.add_option("--nu", cfg.nu_text, "Viscosity nu (nonzero)")->capture_default_str();
  app.add_option("--hbar", cfg.hbar_text, "Planck constant for the q-Schrodinger equation")->capture_default_str();
  app.add_option("--mass", cfg.mass_text, "Particle mass")->capture_default_str();
  app.add_option("--precision-bits", cfg.bits, "Working precision in bits (>= 64; env QCALC_PRECISION_BITS)")
      ->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance_text, "Residual tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: json or csv")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling")->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  // eval
  EvalArgs ea;
  std::map<std::string, std::string> raw;
  auto* eval = app.add_subcommand("eval", "Evaluate a function or polynomial at a point");
  eval->add_option("function", ea.function, "e_q, sinh_q, cosh_q, tanh_q, ln_q, hermite, kdf, shock or psi")
      ->required();
  std::map<std::string, CLI::Option*> eval_opts;
  for (const char* n : {"x", "z", "N", "t", "offset", "p"}) {
    eval_opts[n] = eval->add_option(std::string("--") + n, raw[n]);
  }
  eval_opts["k"] = eval->add_option("--k", ea.k, "Wave numbers, comma separated")->delimiter(',');

  // verify
  std::string suite;
  unsigned n_max = 20, m = 8;
  auto* verify = app.add_subcommand("verify", "Run an identity/residual suite and report as JSON");
  verify->add_option("suite", suite, "hermite-identities, kdf-identities, heat, burgers, schrodinger or all")
      ->required();
  verify->add_option("--Nmax", n_max, "Highest polynomial order")->capture_default_str();
  verify->add_option("--M", m, "Highest truncation order for the e_q([2] x t) identity")->capture_default_str();

  // figure
  std::string fig_id;
  auto* figure = app.add_subcommand("figure", "Write x,u samples of a shock profile (fig1..fig6)");
  figure->add_option("figure_id", fig_id, "fig1..fig6")->required();

  // similarity
  std::vector<std::string> sim_k;
  std::string sim_offset = "0", sim_t = "0", x_lo = "5", x_hi = "50", dump;
  unsigned sim_m = 2, samples = 200;
  auto* sim = app.add_subcommand("similarity", "Self-similarity metric of a shock profile under x -> q^m x");
  sim->add_option("--k", sim_k, "Wave numbers, comma separated (empty: constant solution)")->delimiter(',');
  sim->add_option("--offset", sim_offset)->capture_default_str();
  sim->add_option("--t", sim_t)->capture_default_str();
  sim->add_option("--x-lo", x_lo)->capture_default_str();
  sim->add_option("--x-hi", x_hi)->capture_default_str();
  sim->add_option("--m", sim_m)->capture_default_str();
  sim->add_option("--samples", samples)->capture_default_str();
  sim->add_option("--dump", dump, "CSV file for the two sampled profiles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.validate();
    if (*eval) {
      for (const auto& [n, opt] : eval_opts) {
        if (opt->count() > 0 && n != "k") ea.given[n] = raw[n];
      }
      if (eval_opts["k"]->count() > 0) ea.given["k"] = "";
      const EvalResult r = run_eval(ea, cfg);
      std::ostringstream os;
      if (cfg.format == "csv") {
        os << "function,value,exact,terms_used,cancellation_digits\n"
           << ea.function << "," << csv_field(r.value) << "," << (r.exact ? "true" : "false") << ","
           << (r.terms_used ? std::to_string(*r.terms_used) : "") << ","
           << (r.cancellation_digits ? std::to_string(*r.cancellation_digits) : "") << "\n";
      } else {
        Json args = Json::object();
        for (const auto& [n, v] : ea.given) {
          if (n != "k") args[n] = v;
        }
        if (!ea.k.empty()) args["k"] = ea.k;
        Json j{{"function", ea.function}, {"args", args}, {"config", cfg.to_json()}, {"value", r.value},
               {"exact", r.exact}};
        j["terms_used"] = r.terms_used ? Json(*r.terms_used) : Json(nullptr);
        j["cancellation_digits"] = r.cancellation_digits ? Json(*r.cancellation_digits) : Json(nullptr);
        os << j.dump(2) << "\n";
      }
      emit(cfg, os.str(), out);
      return kExitOk;
    }

    if (*verify) {
      if (!cli::is_suite(suite)) {
        throw DomainError("unknown suite '" + suite +
                          "' (expected hermite-identities, kdf-identities, heat, burgers, schrodinger or all)");
      }
      const std::vector<cli::CheckResult> checks = cli::run_suite(suite, cfg, n_max, m);
      bool pass = true;
      Json list = Json::array();
      for (const auto& c : checks) {
        pass = pass && c.pass;
        list.push_back(cli::to_json(c));
      }
      Json config = cfg.to_json();
      config["Nmax"] = n_max;
      config["M"] = m;
      const Json report{{"suite", suite}, {"config", config}, {"checks", list}, {"pass", pass}};
      emit(cfg, report.dump(2) + "\n", out);
      if (!pass) {
        for (const auto& c : checks) {
          if (!c.pass) err << "FAILED: " << c.check << (c.note ? " (" + *c.note + ")" : "") << "\n";
        }
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (*figure) {
      emit(cfg, figure_csv(fig_id, cfg.bits), out);
      return kExitOk;
    }

    // similarity
    const unsigned bits = cfg.bits;
    const Real one(1L, bits);
    ShockSpec<Real> spec{Real::parse(sim_offset, bits), {}, cfg.q, cfg.nu_real()};
    for (const auto& k : sim_k) spec.terms.push_back({one, Real::parse(k, bits)});
    // No waves: phi is constant and u vanishes identically.
    const VelocityField<Real> u = spec.terms.empty()
                                      ? VelocityField<Real>([bits](const Real&, const Real&) { return Real::zero(bits); })
                                      : shock_multi(spec);
    const Real t = Real::parse(sim_t, bits), lo = Real::parse(x_lo, bits), hi = Real::parse(x_hi, bits);
    if (!spec.terms.empty() && lo > 0 && hi > lo) {
      // Sampling alone can step over a simple pole; bracket sign changes of
      // the denominator over both windows first.
      const Real reach = hi * pow(cfg.q.value(bits), static_cast<long>(sim_m));
      const auto poles = regularity_scan(spec, ScanAxes{lo, reach, lo, 400, t, t, 2, bits});
      if (!poles.empty()) {
        throw PoleError("similarity window contains a pole", poles[0].x_lo.to_string(12), poles[0].x_hi.to_string(12));
      }
    }
    const Real metric = self_similarity_metric(u, cfg.q, t, lo, hi, sim_m, samples);
    const int digits = decimal_digits(bits);
    if (!dump.empty()) {
      const Real qm = pow(cfg.q.value(bits), static_cast<long>(sim_m));
      const Real step = log(hi / lo) / static_cast<long>(samples - 1);
      std::string csv = "x,u,u_scaled\n";
      for (unsigned i = 0; i < samples; ++i) {
        const Real x = lo * exp(step * static_cast<long>(i));
        csv += real_text(x, digits) + "," + real_text(u(x, t), digits) + "," + real_text(u(x * qm, t), digits) + "\n";
      }
      cli::write_atomically(dump, csv);
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
      os << "metric\n" << real_text(metric, digits) << "\n";
    } else {
      Json k = Json::array();
      for (const auto& s : sim_k) k.push_back(s);
      const Json j{{"metric", real_text(metric, digits)},
                   {"params", {{"k", k}, {"offset", sim_offset}, {"t", sim_t}, {"x_lo", x_lo}, {"x_hi", x_hi},
                               {"m", sim_m}, {"samples", samples}}},
                   {"config", cfg.to_json()}};
      os << j.dump(2) << "\n";
    }
    emit(cfg, os.str(), out);
    return kExitOk;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << " (x between " << e.lo() << " and " << e.hi() << ")\n";
  } catch (const QError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: invalid value: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qcalc
