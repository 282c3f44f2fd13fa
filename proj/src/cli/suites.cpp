#include <algorithm>
#include <random>
#include <sstream>

#include "cli_internal.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qburgers.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qheat.hpp"
#include "qcalc/qhermite.hpp"
#include "qcalc/qschrodinger.hpp"
#include "qcalc/qspecial.hpp"

namespace qcalc::cli {
namespace {

using Checks = std::vector<CheckResult>;

CheckResult new_check(std::string check, std::string ref, Json params = Json::object()) {
  CheckResult c;
  c.check = std::move(check);
  c.paper_ref = std::move(ref);
  c.params = std::move(params);
  return c;
}

CheckResult exact_check(std::string check, std::string ref, Json params, std::optional<std::string> mismatch) {
  CheckResult c = new_check(std::move(check), std::move(ref), std::move(params));
  c.exact = !mismatch.has_value();
  c.pass = !mismatch.has_value();
  c.note = std::move(mismatch);
  return c;
}

CheckResult residual_check(std::string check, std::string ref, Json params, const Real& residual,
                           const Real& tolerance) {
  CheckResult c = new_check(std::move(check), std::move(ref), std::move(params));
  c.residual_max = residual.to_string(6);
  c.exact = false;
  c.pass = residual <= tolerance;
  return c;
}

CheckResult skipped(std::string check, std::string ref, const std::string& why) {
  CheckResult c = new_check(std::move(check), std::move(ref));
  c.pass = true;
  c.note = "skipped: " + why;
  return c;
}

// Exact rationals drawn uniformly from {lo/den, ..., hi/den}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  BigRational next(long lo, long hi, long den) {
    std::uniform_int_distribution<long> d(lo, hi);
    return make_rational(d(rng_), den);
  }

 private:
  std::mt19937_64 rng_;
};

std::string str(const BigRational& r) { return qcalc::to_string(r); }

bool near_classical(const QBase& q) {
  return q.classical_limit() || q.exact_value() - 1 <= make_rational(1, 10000);
}

// --- q-Hermite -------------------------------------------------------------

void hermite_suite(const RunConfig& cfg, unsigned n_max, Checks& out) {
  const QBase& q = cfg.q;
  const Json params{{"q", q.to_string()}, {"N_max", n_max}};
  const HermiteFamily ex = hermite_explicit_family(n_max, q);

  out.push_back(exact_check("hermite: explicit sum = N-term recurrence", "N-term recurrence for H_{N+1}(x;q)",
                            params, first_mismatch(ex, hermite_nterm_recurrence(n_max, q))));
  out.push_back(exact_check("hermite: explicit sum = operator product", "one-step operator form of H_{N+1}(x;q)",
                            params, first_mismatch(ex, hermite_operator_product(n_max, q))));
  out.push_back(exact_check("hermite: explicit sum = [2]^N exp(-D^2/[2]^2) x^N", "H_N(x;q) = [2]^N e^{-D^2/[2]^2} x^N", params,
                            first_mismatch(ex, hermite_heat_operator_family(n_max, q))));
  const unsigned m = std::min(n_max, 12u);
  out.push_back(exact_check("hermite: generating function truncation",
                            "generating function e^{-t^2} e_q([2]_q t x)", {{"q", q.to_string()}, {"M", m}},
                            first_mismatch(hermite_explicit_family(m, q), hermite_from_generating(m, q))));

  std::optional<std::string> rec2, rec3, qdiff, shape;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n >= 1 && !rec2 && !hermite_rec2_check(n, q)) rec2 = "fails at N=" + std::to_string(n);
    if (n >= 2 && !rec3 && !hermite_rec3_check(n, q)) rec3 = "fails at N=" + std::to_string(n);
    if (!qdiff) {
      const QPoly r = qdiff_equation_check(n, q);
      if (!r.is_zero()) qdiff = "N=" + std::to_string(n) + " residual " + r.to_string();
    }
    const QPoly& h = ex[n];
    const BigRational sign = n % 2 ? BigRational(-1) : BigRational(1);
    if (!shape) {
      if (h.degree() != static_cast<int>(n) || h.leading() != pow(q_number(2, q), n)) {
        shape = "leading coefficient wrong at N=" + std::to_string(n);
      } else if (h.scaled_argument(BigRational(-1)) != h * sign) {
        shape = "parity fails at N=" + std::to_string(n);
      } else if (n % 2 == 0) {
        BigRational mf(1);
        for (unsigned k = 2; k <= n / 2; ++k) mf *= k;
        const BigRational expected = (n / 2 % 2 ? BigRational(-1) : BigRational(1)) * q_factorial(n, q) / mf;
        if (h.coeff(0) != expected) shape = "constant term wrong at N=" + std::to_string(n);
      }
    }
  }
  out.push_back(exact_check("hermite: D_x H_N = [2][N] H_{N-1}", "two-term recurrence rec2", params, rec2));
  out.push_back(exact_check("hermite: (x d/dx - N) H_N = 2[N][N-1] H_{N-2}", "two-term recurrence rec3", params, rec3));
  out.push_back(exact_check("hermite: q-difference-differential equation",
                            "2 D^2 H_N - [2]^2 x H_N' + [2]^2 N H_N = 0", params, qdiff));
  out.push_back(exact_check("hermite: leading coefficient, constant term, parity", "explicit sum for H_N(x;q)",
                            params, shape));

  if (near_classical(q)) {
    const unsigned top = std::min(n_max, 10u);
    Real worst = Real::zero(cfg.bits);
    for (unsigned n = 0; n <= top; ++n) {
      const QPoly c = classical_hermite(n);
      for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
        if (c.coeff(i) == 0) continue;
        const BigRational rel = (ex[n].coeff(i) - c.coeff(i)) / c.coeff(i);
        worst = max(worst, abs(Real(rel, cfg.bits)));
      }
    }
    out.push_back(residual_check("hermite: classical limit", "q -> 1 reduction to Hermite polynomials",
                                 {{"q", q.to_string()}, {"N_max", top}}, worst, Real::parse("1e-4", cfg.bits)));
  }
}

// --- q-Kampe-de Feriet ----------------------------------------------------

void kdf_suite(const RunConfig& cfg, unsigned n_max, Checks& out) {
  const QBase& q = cfg.q;
  const Json params{{"q", q.to_string()}, {"N_max", n_max}};
  const KdfFamily ex = kdf_explicit_family(n_max, q);

  out.push_back(exact_check("kdf: explicit sum = N-term recurrence", "N-term recurrence for H_{N+1}(x,nu t;q)",
                            params, first_mismatch(ex, kdf_nterm_recurrence(n_max, q))));
  CheckResult op = exact_check("kdf: explicit sum = operator product",
                               "one-step operator form of H_{N+1}(x,nu t;q)", params,
                               first_mismatch(ex, kdf_operator_product(n_max, q, KdfOperatorReading::kConsistent)));
  if (const auto printed = first_mismatch(ex, kdf_operator_product(n_max, q, KdfOperatorReading::kAsPrinted))) {
    op.note = "denominator [l+1]_q used; the printed [l]_q reading differs: " + *printed;
  }
  out.push_back(std::move(op));

  KdfFamily evolved{q, HermiteRoute::kHeatOperator, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    evolved.polys.push_back(evolution_symbolic(QPoly::monomial(BigRational(1), n), q));
  }
  out.push_back(exact_check("kdf: explicit sum = e^{s D^2} x^N", "evolution operator U(t) = e^{nu t D^2}", params,
                            first_mismatch(ex, evolved)));
  const KdfFamily gen{q, HermiteRoute::kGenerating, kdf_from_generating(n_max, q)};
  out.push_back(exact_check("kdf: explicit sum = generating function", "e^{nu k^2 t} e_q(kx) expansion", params,
                            first_mismatch(ex, gen)));

  std::optional<std::string> at_zero;
  for (unsigned n = 0; n <= n_max && !at_zero; ++n) {
    if (ex[n].at_s(BigRational(0)) != QPoly::monomial(BigRational(1), n)) at_zero = "N=" + std::to_string(n);
  }
  out.push_back(exact_check("kdf: H_N(x,0) = x^N", "explicit sum for H_N(x,nu t;q)", params, at_zero));

  // Scaling identity at seeded sample points with nu t < 0.
  Sampler rng(cfg.seed);
  const unsigned top = std::min(n_max, 10u);
  Real worst = Real::zero(cfg.bits);
  for (unsigned n = 0; n <= top; ++n) {
    std::vector<ScalingSample> samples;
    for (int i = 0; i < 4; ++i) {
      const BigRational x = rng.next(-2000, 2000, 1000);
      const BigRational t = rng.next(1, 1000, 1000) * (cfg.nu > 0 ? -1 : 1);
      samples.push_back({Real(x, cfg.bits), Real(cfg.nu, cfg.bits), Real(t, cfg.bits)});
    }
    worst = max(worst, kdf_scaling_check(n, q, samples).max_rel_error);
  }
  out.push_back(residual_check("kdf: scaling to H_N(x;q)", "H_N(x,nu t) = (-nu t)^{N/2} H_N(x/([2]sqrt(-nu t)))",
                               {{"q", q.to_string()}, {"N_max", top}, {"seed", cfg.seed}}, worst,
                               ldexp(Real(1L, cfg.bits), -static_cast<long>(cfg.bits) + 32)));
}

// --- q-heat ------------------------------------------------------------------

void heat_suite(const RunConfig& cfg, unsigned n_max, unsigned m, Checks& out) {
  const QBase& q = cfg.q;
  const unsigned bits = cfg.bits;

  std::optional<std::string> poly;
  for (unsigned n = 0; n <= n_max && !poly; ++n) {
    if (!heat_residual_poly(kdf_explicit(n, q), q).is_zero()) poly = "nonzero residual at N=" + std::to_string(n);
  }
  out.push_back(exact_check("heat: polynomial solutions H_N(x,nu t;q)", "(d/dt - nu D^2) phi = 0",
                            {{"q", q.to_string()}, {"N_max", n_max}}, poly));

  if (q.classical_limit()) {
    out.push_back(skipped("heat: plane wave residual", "plane wave e^{nu k^2 t} e_q(kx)", "dilation needs q > 1"));
  } else {
    const Real nu = cfg.nu_real();
    const auto sol = plane_wave(Real(1L, bits), q, nu);
    const Grid grid = make_grid(linspace(Real::parse("0.1", bits), Real(10L, bits), 10, bits),
                                linspace(Real::zero(bits), Real(1L, bits), 10, bits));
    out.push_back(residual_check("heat: plane wave residual", "plane wave e^{nu k^2 t} e_q(kx)",
                                 {{"q", q.to_string()}, {"k", "1"}, {"nu", str(cfg.nu)}, {"grid", "10x10"}},
                                 heat_residual(sol, grid).max_abs, cfg.tolerance));
  }

  std::optional<std::string> prop1;
  for (unsigned k = 0; k <= m && !prop1; ++k) {
    const Prop1Check c = prop1_check(k, q);
    if (!c.pass) prop1 = "M=" + std::to_string(k) + " " + *c.mismatch;
  }
  out.push_back(exact_check("heat: e^{-D^2/[2]^2} e_q([2]xt) truncations", "e^{-D^2/[2]^2} e_q([2] x t) = e^{-t^2} e_q([2] x t)", {{"q", q.to_string()}, {"M_max", m}},
                            prop1));

  Sampler rng(cfg.seed);
  std::vector<BigRational> a;
  for (unsigned n = 0; n <= n_max; ++n) a.push_back(rng.next(-5, 5, 1));
  out.push_back(exact_check("heat: Hermite series transform", "sum a_N x^N -> sum a_N H_N(x;q) / [2]^N",
                            {{"q", q.to_string()}, {"N_max", n_max}, {"seed", cfg.seed}},
                            first_mismatch(hermite_series_transform(a, q), hermite_series_direct(a, q))));

  std::vector<BigRational> p_coeffs;
  for (unsigned n = 0; n <= 10; ++n) p_coeffs.push_back(rng.next(-9, 9, 1));
  const QPoly p(p_coeffs);
  const BigRational s1 = make_rational(1, 3), s2 = make_rational(-5, 7);
  out.push_back(exact_check("heat: evolution semigroup", "U(t1) U(t2) = U(t1 + t2)",
                            {{"q", q.to_string()}, {"degree", 10}, {"s1", str(s1)}, {"s2", str(s2)}},
                            first_mismatch(evolution_apply(evolution_apply(p, q, s1), q, s2),
                                           evolution_apply(p, q, s1 + s2))));

  const std::vector<BigRational> ivp{BigRational(5), BigRational(1), BigRational(2)};
  const HeatSolution<Real> sol = solve_ivp_series(ivp, q, cfg.nu_real());
  std::optional<std::string> ivp_bad;
  if (!heat_residual_poly(sol.poly(), q).is_zero()) ivp_bad = "nonzero residual";
  if (sol.poly().slice(0) != QPoly(ivp)) ivp_bad = "phi(x,0) differs from the initial data";
  out.push_back(exact_check("heat: IVP for polynomial data", "phi(x,t) = e^{nu t D^2} f(x)",
                            {{"q", q.to_string()}, {"a", "5,1,2"}}, ivp_bad));
}

// --- q-Burgers ---------------------------------------------------------------

void burgers_suite(const RunConfig& cfg, Checks& out) {
  const QBase& q = cfg.q;
  if (q.classical_limit()) {
    out.push_back(skipped("burgers: suite", "q-Cole-Hopf transformation", "dilation needs q > 1"));
    return;
  }
  const unsigned bits = cfg.bits;
  const Real nu = cfg.nu_real();
  const Real one(1L, bits);
  const Json base{{"q", q.to_string()}, {"nu", str(cfg.nu)}};

  BurgersVariant variant = canonical_variant();
  {
    CheckResult c = new_check("burgers: variant calibration", "q-Burgers equation with cubic nonlinearity", base);
    try {
      const CalibrationResult cal = variant_calibrate_table(q, nu, bits);
      variant = cal.variant;
      c.pass = cal.variant == canonical_variant();
      c.exact = false;
      c.variant = cal.variant.to_string();
      std::ostringstream os;
      for (const auto& row : cal.table) {
        Real w = Real::zero(64);
        for (const auto& r : row.max_residuals) w = max(w, r);
        os << row.variant.to_string() << "=" << w.to_string(3) << (&row == &cal.table.back() ? "" : "; ");
      }
      c.note = "max residual per reading: " + os.str();
      if (!c.pass) *c.note += " (differs from the canonical " + canonical_variant().to_string() + ")";
    } catch (const CalibrationError& e) {
      c.pass = false;
      c.note = e.what();
    }
    out.push_back(std::move(c));
  }

  // Cole-Hopf images of heat solutions on a grid away from the calibration one.
  const Grid grid = make_grid({Real::parse("0.4", bits), Real::parse("1.1", bits), Real::parse("2.3", bits)},
                              {Real::parse("0.2", bits), Real::parse("0.7", bits)});
  const std::vector<std::pair<std::string, HeatSolution<Real>>> images{
      {"plane wave k=1", HeatSolution<Real>::plane_wave(one, q, nu)},
      {"static tanh_q shock", ShockSpec<Real>{Real::zero(bits), {{one, one}, {one, -one}}, q, nu}.heat_solution()},
      {"offset shock c=10", ShockSpec<Real>{Real(10L, bits), {{one, one}, {one, -one}}, q, nu}.heat_solution()},
      {"four-wave shock", four_wave_spec(q, nu).heat_solution()},
      {"H_3 polynomial", HeatSolution<Real>::polynomial(kdf_explicit(3, q), q, nu)},
  };
  for (const auto& [name, phi] : images) {
    CheckResult c = residual_check("burgers: Cole-Hopf image of " + name, "u = -2 nu D_x phi / phi", base,
                                   burgers_residual(cole_hopf(phi), grid, q, nu, bits, variant).max_abs,
                                   cfg.tolerance);
    c.variant = variant.to_string();
    out.push_back(std::move(c));
  }

  {
    const auto u = shock_single(one, -one, q, nu);
    Real worst = Real::zero(bits);
    for (const char* xs : {"0.3", "1.7", "-4.2", "25"}) {
      const Real x = Real::parse(xs, bits);
      worst = max(worst, abs(u(x, Real(3L, bits)) + nu * tanh_q(x, q) * 2L));
    }
    out.push_back(residual_check("burgers: static shock = -2 nu tanh_q(x)", "stationary shock soliton", base, worst,
                                 cfg.tolerance));
  }

  {
    Sampler rng(cfg.seed);
    const auto u = shock_multi(four_wave_spec(q, nu));
    Real worst = Real::zero(bits);
    for (int i = 0; i < 20; ++i) {
      const Real x(rng.next(-3000, 3000, 1000), bits);
      const Real t(rng.next(-1000, 1000, 1000), bits);
      worst = max(worst, abs(u(x, t) - four_wave_closed_form(x, t, q, nu)));
    }
    out.push_back(residual_check("burgers: four-wave superposition = sinh_q/cosh_q form", "N=4 multi-shock",
                                 {{"q", q.to_string()}, {"nu", str(cfg.nu)}, {"samples", 20}, {"seed", cfg.seed}},
                                 worst, cfg.tolerance));
  }

  // Regular shocks, scanned over |x| <= 50 here (the full 10^4 range is in
  // the acceptance suite).
  for (const auto& [name, spec] : {std::pair{std::string("offset shock c=10"),
                                             ShockSpec<Real>{Real(10L, bits), {{one, one}, {one, -one}}, q, nu}},
                                   std::pair{std::string("four-wave shock"), four_wave_spec(q, nu)}}) {
    const ScanAxes axes{Real(-50L, bits), Real(50L, bits), Real::parse("0.001", bits), 400,
                        Real(-50L, bits), Real(50L, bits), 21, bits};
    const auto brackets = regularity_scan(spec, axes);
    CheckResult c = new_check("burgers: no poles for " + name, "regular everywhere in x for arbitrary time t",
                  Json{{"q", q.to_string()}, {"x", "[-50,50]"}, {"t", "[-50,50]"}, {"points_per_decade", 400}});
    c.exact = false;
    c.pass = brackets.empty();
    if (!brackets.empty()) {
      c.note = std::to_string(brackets.size()) + " brackets, first at t=" + brackets[0].t.to_string(6) + " x in [" +
               brackets[0].x_lo.to_string(8) + ", " + brackets[0].x_hi.to_string(8) + "]";
    }
    out.push_back(std::move(c));
  }

  if (cfg.nu > 0) {
    const auto u = shock_offset(Real(10L, bits), one, -one, q, nu);
    const Real u10 = u(one, Real(-10L, bits)), u20 = u(one, Real(-20L, bits)), u40 = u(one, Real(-40L, bits));
    const Real r1 = u20 / u10 / exp(nu * -10L);
    const Real r2 = u40 / u20 / exp(nu * -20L);
    const Real dev = max(abs(r1 - 1L), abs(r2 - 1L));
    out.push_back(residual_check("burgers: offset shock decay as t -> -infinity", "u(x,t) -> 0 at t -> -infinity",
                                 {{"q", q.to_string()}, {"x", "1"}, {"T", "10,20,40"}}, dev,
                                 Real::parse("0.01", bits)));
    const Real late = abs(u(one, Real(40L, bits)) + nu * tanh_q(one, q) * 2L);
    out.push_back(residual_check("burgers: offset shock limit as t -> +infinity", "u -> -2 nu tanh_q(x)",
                                 {{"q", q.to_string()}, {"x", "1"}, {"T", "40"}}, late, Real::parse("1e-3", bits)));
  }

  if (q.exact_value() - 1 >= make_rational(1, 2)) {
    const unsigned n_max = 10;
    const auto zeros = zeros_of_eq(q, n_max, bits);
    Real worst = Real::zero(bits);
    for (unsigned n = 0; n <= n_max; ++n) {
      const Real exact = eq_zero_closed_form(q, n, bits);
      worst = max(worst, abs((zeros[n] - exact) / exact));
    }
    out.push_back(residual_check("burgers: zeros of e_q", "zeros of e_q at -q^{n+1}/(q-1)",
                                 {{"q", q.to_string()}, {"n_max", n_max}}, worst, Real::parse("1e-20", bits)));
  }

  {
    const BigRational two = q_number(2, q);
    const QPoly f = QPoly::monomial(BigRational(1), 2);
    const QPoly p = QPoly::monomial(BigRational(-2 * cfg.nu * two), 1);
    const QPoly den = QPoly::monomial(BigRational(1), 2);
    const QPoly r = ivp_initial_profile(f, p, den, cfg.nu, q);
    out.push_back(exact_check("burgers: IVP reduction for f = x^2", "(D_x + F/(2 nu)) f = 0",
                              {{"q", q.to_string()}, {"F", "-2 nu [2] x / x^2"}},
                              r.is_zero() ? std::nullopt : std::optional<std::string>(r.to_string())));
  }

  if (near_classical(q)) {
    const auto u = cole_hopf(HeatSolution<Real>::superposition(Real::zero(bits), {{one, one}, {one, Real(2L, bits)}}, q, nu));
    const Grid g = make_grid({Real::parse("0.5", bits), Real::parse("1.5", bits)}, {Real::parse("0.3", bits)});
    out.push_back(residual_check("burgers: classical Burgers limit", "q -> 1 reduction to u_t + u u_x = nu u_xx",
                                 base, classical_burgers_residual(u, g, nu, bits).max_abs, Real::parse("1e-4", bits)));
  }
}

// --- q-Schrodinger -----------------------------------------------------------

void schrodinger_suite(const RunConfig& cfg, Checks& out) {
  const unsigned bits = cfg.bits;
  QuantumParams params{cfg.hbar, cfg.mass, cfg.q};
  const Json base{{"q", cfg.q.to_string()}, {"hbar", str(cfg.hbar)}, {"mass", str(cfg.mass)}};

  std::optional<std::string> poly;
  for (unsigned n = 0; n <= 15 && !poly; ++n) {
    if (!schrodinger_residual_poly(*kdf_complex(n, params), params).is_zero()) poly = "N=" + std::to_string(n);
  }
  CheckResult kdf = exact_check("schrodinger: H^(s)_N polynomial solutions", "complex q-Kampe-de Feriet polynomials",
                                base, poly);
  {
    const auto printed = kdf_complex(3, params, SchrodingerKdfReading::kAsPrinted);
    const bool printed_ok = printed && schrodinger_residual_poly(*printed, params).is_zero();
    kdf.note = std::string("denominator [N-2k]_q! used; the printed [N-2k]_q k! reading ") +
               (printed_ok ? "also solves the equation at N=3" : "is not a solution (N=3), and is undefined for even N");
  }
  out.push_back(std::move(kdf));

  const auto gen = schrodinger_generating_coefficients(10, params);
  std::optional<std::string> gen_bad;
  for (unsigned n = 0; n <= 10 && !gen_bad; ++n) {
    const GaussianRational scale =
        pow(GaussianRational::i() / GaussianRational(cfg.hbar), n) / GaussianRational(q_factorial(n, cfg.q));
    if (*kdf_complex(n, params) * scale != gen[n]) gen_bad = "N=" + std::to_string(n);
  }
  out.push_back(exact_check("schrodinger: plane wave expansion in p", "generating function of H^(s)_N", base, gen_bad));

  if (cfg.q.classical_limit()) {
    out.push_back(skipped("schrodinger: field checks", "complex q-Cole-Hopf transformation", "dilation needs q > 1"));
  } else {
    Real worst = Real::zero(bits);
    for (const char* ps : {"1", "-1", "2", "1/2"}) {
      const Real p = Real::parse(ps, bits);
      const auto u = complex_cole_hopf(schrodinger_plane_wave(p, params), params);
      const Complex expected(p / Real(cfg.mass, bits));
      for (const char* xs : {"0.3", "1.7", "-0.9"}) {
        for (const char* ts : {"0.2", "1.1"}) {
          worst = max(worst, abs(u(Real::parse(xs, bits), Real::parse(ts, bits)) - expected));
        }
      }
    }
    out.push_back(residual_check("schrodinger: Cole-Hopf of plane waves = p/m", "u = -(i hbar/m) D_x psi / psi",
                                 base, worst, Real::parse("1e-30", bits)));

    CheckResult cal = new_check("schrodinger: Madelung variant calibration", "complex q-Burgers-Madelung equation", base);
    BurgersVariant variant = madelung_canonical_variant();
    try {
      variant = madelung_calibrate(params, bits);
      cal.pass = true;
      cal.variant = variant.to_string();
    } catch (const CalibrationError& e) {
      cal.pass = false;
      cal.note = e.what();
    }
    out.push_back(std::move(cal));

    const Real one(1L, bits);
    const auto psi = schrodinger_superposition(Complex::zero(bits), {{Complex(one), one}, {Complex(one), -one}}, params);
    const auto u = complex_cole_hopf(psi, params);
    const Grid grid = make_grid(linspace(Real::parse("0.3", bits), Real::parse("2.1", bits), 5, bits),
                                linspace(Real::parse("0.1", bits), Real::parse("0.9", bits), 5, bits));
    CheckResult mad = residual_check("schrodinger: Madelung residual for p = +-1", "complex q-Burgers-Madelung equation",
                                     base, madelung_residual(u, grid, params, bits, variant).max_abs, cfg.tolerance);
    mad.variant = variant.to_string();
    out.push_back(std::move(mad));

    const TwoFluidCheck split = two_fluid_split_check(u, grid, params, bits);
    CheckResult sc = residual_check("schrodinger: two-fluid split = components of the complex equation",
                                    "real and imaginary parts (two fluid model)", base, split.max_discrepancy,
                                    Real::parse("1e-18", bits));
    sc.note = "printed real-part residual max " + split.real_equation.max_abs.to_string(6) +
              ", imaginary-part residual max " + split.imag_equation.max_abs.to_string(6);
    out.push_back(std::move(sc));
  }

  // q -> 1: residuals of the classical equations scale like eps.
  const std::vector<std::string> eps{"1/10000", "1/100000", "1/1000000"};
  std::vector<MadelungLimitReport> reports;
  const Grid g = make_grid({Real::parse("0.3", bits), Real::parse("0.9", bits)}, {Real::parse("0.2", bits)});
  for (const auto& e : eps) {
    QuantumParams pe{cfg.hbar, cfg.mass, QBase::exact(1 + parse_rational(e))};
    reports.push_back(classical_madelung_limit(two_wave_test_state(pe, bits), pe, g, bits));
  }
  auto slope = [&](Real MadelungLimitReport::*field) {
    Real worst = Real::zero(bits);
    for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
      const Real s = log10(reports[i].*field / reports[i + 1].*field);  // eps ratio is 10
      worst = max(worst, abs(s - 1L));
    }
    return worst;
  };
  const Json lim{{"eps", "1e-4,1e-5,1e-6"}, {"hbar", str(cfg.hbar)}, {"mass", str(cfg.mass)}};
  out.push_back(residual_check("schrodinger: continuity residual is O(eps)",
                               "q -> 1 reduction to the continuity equation", lim,
                               slope(&MadelungLimitReport::continuity_reduced), Real::parse("0.1", bits)));
  out.push_back(residual_check("schrodinger: quantum Hamilton-Jacobi residual is O(eps)",
                               "q -> 1 reduction to the quantum Hamilton-Jacobi equation", lim,
                               slope(&MadelungLimitReport::hamilton_jacobi), Real::parse("0.1", bits)));
  out.push_back(residual_check("schrodinger: rho continuity residual is O(eps)", "rho_t + (rho v)_x = 0", lim,
                               slope(&MadelungLimitReport::continuity), Real::parse("0.1", bits)));
  out.push_back(residual_check("schrodinger: Euler residual is O(eps)", "Euler equation with quantum potential", lim,
                               slope(&MadelungLimitReport::euler), Real::parse("0.1", bits)));
}

}  // namespace

bool is_suite(const std::string& name) {
  return name == "hermite-identities" || name == "kdf-identities" || name == "heat" || name == "burgers" ||
         name == "schrodinger" || name == "all";
}

std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg, unsigned n_max, unsigned m) {
  if (!cfg.q.is_exact()) throw DomainError("verification suites need an exact rational q");
  Checks out;
  const bool all = name == "all";
  if (all || name == "hermite-identities") hermite_suite(cfg, n_max, out);
  if (all || name == "kdf-identities") kdf_suite(cfg, n_max, out);
  if (all || name == "heat") heat_suite(cfg, n_max, m, out);
  if (all || name == "burgers") burgers_suite(cfg, out);
  if (all || name == "schrodinger") schrodinger_suite(cfg, out);
  return out;
}

}  // namespace qcalc::cli
