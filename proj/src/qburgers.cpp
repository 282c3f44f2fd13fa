#include "qcalc/qburgers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qhermite.hpp"
#include "qcalc/qspecial.hpp"

namespace qcalc {
namespace {

constexpr unsigned kGuardBits = 64;
constexpr double kCalibrationThreshold = 1e-15;

unsigned point_bits(const Real& x, const Real& t) { return std::max(x.precision(), t.precision()); }

[[noreturn]] void throw_pole(const Real& x, const Real& t) {
  const std::string at = x.to_string(20);
  throw PoleError("Cole-Hopf denominator vanishes at x = " + at + ", t = " + t.to_string(20), at, at);
}

}  // namespace

template <class T>
VelocityField<T> cole_hopf(const HeatSolution<T>& phi) {
  using Kind = typename HeatSolution<T>::Kind;
  if (phi.kind() == Kind::kPolynomial) {
    return [phi](const Real& x, const Real& t) {
      const T v = phi.value(x, t);
      if (v.is_zero()) throw_pole(x, t);
      return phi.nu() * phi.dx(x, t) * -2L / v;
    };
  }
  // Superposition: phi and D_x phi share the per-term factors.
  return [phi](const Real& x, const Real& t) {
    const unsigned bits = point_bits(x, t);
    const T xx = T(x.rounded(bits));
    const T tt = T(t.rounded(bits));
    T num = T(Real::zero(bits));
    T den = phi.kind() == Kind::kSuperposition ? T(phi.offset().rounded(bits)) : T(Real::zero(bits));
    Real scale = abs(den);
    for (const auto& term : phi.terms()) {
      const T w = term.amplitude * exp(phi.nu() * term.k * term.k * tt) * e_q_absolute(term.k * xx, phi.q());
      num += term.k * w;
      den += w;
      scale += abs(w);
    }
    if (den.is_zero() || abs(den) <= ldexp(scale, -static_cast<long>(bits / 2))) throw_pole(x, t);
    return phi.nu() * num * -2L / den;
  };
}

template <class T>
VelocityField<T> cole_hopf(const Field<T>& phi, const QBase& q, const T& nu) {
  return [phi, q, nu](const Real& x, const Real& t) {
    const std::function<T(const T&)> f = [&](const T& xx) { return phi(real_part(xx), t); };
    const T v = phi(x, t);
    if (v.is_zero()) throw_pole(x, t);
    if (x.is_zero()) throw GridError("Cole-Hopf by dilation is undefined at x = 0");
    return nu * q_derivative_fn(f, T(x), q).value * -2L / v;
  };
}

template <class T>
T BurgersTerms<T>::residual(const BurgersVariant& v) const {
  const T& g = v.grouping == BurgersVariant::Grouping::kOpOnProduct ? g_op_on_product : g_u_times_op;
  const T& cubic = v.time_arg == BurgersVariant::TimeArg::kPlainTime ? cubic_plain : cubic_dilated;
  return u_t - d2u - ((g - d_product) / 2L + cubic);
}

template <class T>
BurgersTerms<T> burgers_terms(const VelocityField<T>& u, const GridPoint& p, const QBase& q, const T& nu,
                              unsigned bits) {
  if (q.classical_limit()) throw DomainError("q-Burgers residual needs q > 1");
  if (p.x.is_zero()) throw GridError("q-Burgers residual is undefined at x = 0");
  const unsigned work = bits + kGuardBits;
  const Real x = p.x.rounded(work);
  const Real t = p.t.rounded(work);
  const Real qv = q.value(work);
  const Real h = (qv - 1L) * x;  // (q - 1) x

  const T u0 = u(x, t);
  const T u1 = u(x * qv, t);
  const T u2 = u(x * qv * qv, t);
  const T u_qt = u(x, t * qv);
  const T du0 = (u1 - u0) / T(h);
  const T du1 = (u2 - u1) / T(h * qv);
  const std::function<T(const Real&)> along_t = [&](const Real& tt) { return u(x, tt); };

  BurgersTerms<T> r;
  r.u_t = time_derivative_fd(along_t, t, work);
  r.d2u = nu * (du1 - du0) / T(h);
  r.g_op_on_product = u0 * du0 - u1 * du1;
  r.g_u_times_op = u0 * (du0 - du1);
  r.d_product = (u2 * u1 - u1 * u0) / T(h);
  const T quarter_nu = nu * 4L;
  r.cubic_plain = (u2 - u0) * u1 * u0 / quarter_nu;
  r.cubic_dilated = (u2 - u_qt) * u1 * u0 / quarter_nu;
  return r;
}

template <class T>
ResidualReport<T> burgers_residual(const VelocityField<T>& u, const Grid& grid, const QBase& q, const T& nu,
                                   unsigned bits, std::optional<BurgersVariant> variant) {
  const BurgersVariant v = variant ? *variant : canonical_variant();
  std::vector<T> res;
  res.reserve(grid.size());
  for (const auto& p : grid) res.push_back(burgers_terms(u, p, q, nu, bits).residual(v).rounded(bits));
  return make_report(grid, std::move(res), v);
}

template VelocityField<Real> cole_hopf(const HeatSolution<Real>&);
template VelocityField<Complex> cole_hopf(const HeatSolution<Complex>&);
template VelocityField<Real> cole_hopf(const Field<Real>&, const QBase&, const Real&);
template VelocityField<Complex> cole_hopf(const Field<Complex>&, const QBase&, const Complex&);
template struct BurgersTerms<Real>;
template struct BurgersTerms<Complex>;
template BurgersTerms<Real> burgers_terms(const VelocityField<Real>&, const GridPoint&, const QBase&,
                                          const Real&, unsigned);
template BurgersTerms<Complex> burgers_terms(const VelocityField<Complex>&, const GridPoint&, const QBase&,
                                             const Complex&, unsigned);
template ResidualReport<Real> burgers_residual(const VelocityField<Real>&, const Grid&, const QBase&,
                                               const Real&, unsigned, std::optional<BurgersVariant>);
template ResidualReport<Complex> burgers_residual(const VelocityField<Complex>&, const Grid&, const QBase&,
                                                  const Complex&, unsigned, std::optional<BurgersVariant>);

namespace {

std::vector<BurgersVariant> all_variants() {
  using G = BurgersVariant::Grouping;
  using Tm = BurgersVariant::TimeArg;
  return {{G::kOpOnProduct, Tm::kPlainTime},
          {G::kOpOnProduct, Tm::kDilatedTime},
          {G::kUTimesOpOnDu, Tm::kPlainTime},
          {G::kUTimesOpOnDu, Tm::kDilatedTime}};
}

}  // namespace

CalibrationResult variant_calibrate_table(const QBase& q, const Real& nu, unsigned bits) {
  const Real one(1L, bits);
  const Real n = nu.rounded(bits);
  std::vector<std::pair<std::string, HeatSolution<Real>>> fields;
  fields.emplace_back("plane wave k=1", HeatSolution<Real>::plane_wave(one, q, n));
  fields.emplace_back("static tanh_q shock k=+-1",
                      HeatSolution<Real>::superposition(Real::zero(bits), {{one, one}, {one, -one}}, q, n));
  fields.emplace_back("offset shock c=10 k=+-1",
                      HeatSolution<Real>::superposition(Real(10L, bits), {{one, one}, {one, -one}}, q, n));
  fields.emplace_back("four waves k=+-1,+-2", four_wave_spec(q, n).heat_solution());
  fields.emplace_back("H_2 polynomial", HeatSolution<Real>::polynomial(kdf_explicit(2, q), q, n));

  std::vector<Real> xs{Real::parse("0.25", bits), Real::parse("0.8", bits), Real::parse("1.7", bits)};
  std::vector<Real> ts{Real::parse("0.3", bits), Real::parse("0.9", bits)};
  const Grid grid = make_grid(xs, ts);

  const auto variants = all_variants();
  CalibrationResult out;
  for (const auto& v : variants) out.table.push_back({v, {}, true});
  const Real threshold(kCalibrationThreshold, bits);
  for (const auto& [name, phi] : fields) {
    out.fields.push_back(name);
    const VelocityField<Real> u = cole_hopf(phi);
    std::vector<Real> worst(variants.size(), Real::zero(bits));
    for (const auto& p : grid) {
      const BurgersTerms<Real> terms = burgers_terms(u, p, q, n, bits);
      for (std::size_t i = 0; i < variants.size(); ++i) {
        worst[i] = max(worst[i], abs(terms.residual(variants[i])));
      }
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
      out.table[i].max_residuals.push_back(worst[i].rounded(64));
      if (!(worst[i] < threshold)) out.table[i].pass = false;
    }
  }

  const auto passing = std::count_if(out.table.begin(), out.table.end(), [](const auto& r) { return r.pass; });
  if (passing != 1) {
    std::ostringstream os;
    os << "variant calibration at q = " << q.to_string() << " found " << passing << " passing readings\n";
    for (const auto& row : out.table) {
      os << "  " << row.variant.to_string() << ":";
      for (const auto& r : row.max_residuals) os << " " << r.to_string(6);
      os << (row.pass ? "  pass" : "  fail") << "\n";
    }
    throw CalibrationError(os.str());
  }
  out.variant = std::find_if(out.table.begin(), out.table.end(), [](const auto& r) { return r.pass; })->variant;
  return out;
}

BurgersVariant variant_calibrate(const QBase& q, const Real& nu, unsigned bits) {
  return variant_calibrate_table(q, nu, bits).variant;
}

const BurgersVariant& canonical_variant() {
  static const BurgersVariant v = variant_calibrate(QBase::exact(2), Real(1L, kDefaultPrecisionBits));
  return v;
}

template <class T>
bool ShockSpec<T>::paired_regular() const {
  if (terms.empty()) return false;
  if (real_part(offset).sign() < 0 || !imag_part(offset).is_zero()) return false;
  std::vector<bool> used(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (used[i]) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < terms.size() && !found; ++j) {
      if (!used[j] && terms[j].k == -terms[i].k && terms[j].amplitude == terms[i].amplitude) {
        used[i] = used[j] = found = true;
      }
    }
    if (!found) return false;
    // Positive real amplitudes keep the cosh_q sum positive.
    if (!imag_part(terms[i].amplitude).is_zero() || real_part(terms[i].amplitude).sign() <= 0) return false;
    if (!imag_part(terms[i].k).is_zero() || !imag_part(nu).is_zero()) return false;
  }
  return true;
}
template struct ShockSpec<Real>;
template struct ShockSpec<Complex>;

VelocityField<Real> shock_single(const Real& k1, const Real& k2, const QBase& q, const Real& nu) {
  if (k1.is_zero() && k2.is_zero()) throw DomainError("shock_single needs (k1, k2) != (0, 0)");
  const Real one(1L, k1.precision());
  return cole_hopf(HeatSolution<Real>::superposition(Real::zero(k1.precision()), {{one, k1}, {one, k2}}, q, nu));
}

VelocityField<Real> shock_offset(const Real& c, const Real& k1, const Real& k2, const QBase& q, const Real& nu) {
  if (c.sign() < 0) throw DomainError("shock_offset needs c >= 0");
  const Real one(1L, k1.precision());
  return cole_hopf(HeatSolution<Real>::superposition(c, {{one, k1}, {one, k2}}, q, nu));
}

VelocityField<Real> shock_multi(const ShockSpec<Real>& spec) {
  if (spec.terms.empty()) throw DomainError("shock spec needs at least one term");
  return cole_hopf(spec.heat_solution());
}

ShockSpec<Real> four_wave_spec(const QBase& q, const Real& nu) {
  const unsigned bits = nu.precision();
  const Real one(1L, bits);
  const Real two(2L, bits);
  return {Real::zero(bits), {{one, one}, {one, -one}, {one, two}, {one, -two}}, q, nu};
}

Real four_wave_closed_form(const Real& x, const Real& t, const QBase& q, const Real& nu) {
  const unsigned bits = point_bits(x, t);
  const Real xx = x.rounded(bits);
  const Real x2 = ldexp(xx, 1);
  const Real g = exp(nu * t * 3L);
  return nu * -2L * (sinh_q(xx, q) + g * sinh_q(x2, q) * 2L) / (cosh_q(xx, q) + g * cosh_q(x2, q));
}

std::vector<PoleBracket> regularity_scan(const ShockSpec<Real>& spec, const ScanAxes& axes) {
  const unsigned bits = axes.bits;
  if (axes.points_per_decade < 1 || axes.t_points < 2) throw DomainError("regularity_scan needs >= 2 points per axis");
  if (!(axes.min_abs > 0)) throw DomainError("regularity_scan needs min_abs > 0");

  // Signed x-grid, ascending.
  const Real ratio = pow(Real(10L, bits), Real(1L, bits) / static_cast<long>(axes.points_per_decade));
  const Real reach = max(abs(axes.x_min), abs(axes.x_max));
  std::vector<Real> mags;
  for (Real m = axes.min_abs.rounded(bits); m <= reach; m = m * ratio) mags.push_back(m);
  std::vector<Real> xs;
  for (auto it = mags.rbegin(); it != mags.rend(); ++it) {
    if (-*it >= axes.x_min) xs.push_back(-*it);
  }
  if (axes.x_min.sign() <= 0 && axes.x_max.sign() >= 0) xs.push_back(Real::zero(bits));
  for (const auto& m : mags) {
    if (m <= axes.x_max) xs.push_back(m);
  }

  const std::vector<Real> ts = linspace(axes.t_min, axes.t_max, axes.t_points, bits);
  const Real offset = spec.offset.rounded(bits);

  // e_q(k_n x_i) once per x; the time factors a_n e^(nu k_n^2 t_j) once per t.
  std::vector<std::vector<Real>> eq(spec.terms.size());
  for (std::size_t n = 0; n < spec.terms.size(); ++n) {
    eq[n].reserve(xs.size());
    for (const auto& x : xs) eq[n].push_back(e_q_absolute(spec.terms[n].k * x, spec.q));
  }

  std::vector<PoleBracket> out;
  for (const auto& t : ts) {
    std::vector<Real> w;
    for (const auto& term : spec.terms) w.push_back(term.amplitude * exp(spec.nu * term.k * term.k * t));
    int prev_sign = 0;
    std::size_t prev_i = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Real den = offset;
      for (std::size_t n = 0; n < w.size(); ++n) den += w[n] * eq[n][i];
      const int s = den.sign();
      if (s == 0) {
        out.push_back({t, i > 0 ? xs[i - 1] : xs[i], i + 1 < xs.size() ? xs[i + 1] : xs[i]});
        continue;
      }
      if (prev_sign != 0 && s != prev_sign) out.push_back({t, xs[prev_i], xs[i]});
      prev_sign = s;
      prev_i = i;
    }
  }
  return out;
}

Real self_similarity_metric(const VelocityField<Real>& u, const QBase& q, const Real& t, const Real& x_lo,
                            const Real& x_hi, unsigned m, unsigned samples) {
  if (!(x_lo > 0) || !(x_hi > x_lo)) throw DomainError("self_similarity_metric needs 0 < x_lo < x_hi");
  if (m < 1 || samples < 2) throw DomainError("self_similarity_metric needs m >= 1 and >= 2 samples");
  const unsigned bits = std::max({t.precision(), x_lo.precision(), x_hi.precision()});
  const Real qm = pow(q.value(bits), static_cast<long>(m));
  const Real step = log(x_hi.rounded(bits) / x_lo) / static_cast<long>(samples - 1);

  Real ab = Real::zero(bits), aa = Real::zero(bits), bb = Real::zero(bits);
  for (unsigned i = 0; i < samples; ++i) {
    const Real x = x_lo.rounded(bits) * exp(step * static_cast<long>(i));
    Real a, b;
    try {
      a = u(x, t);
      b = u(x * qm, t);
    } catch (const PoleError& e) {
      throw DomainError(std::string("self_similarity_metric: window contains a pole: ") + e.what());
    }
    ab += a * b;
    aa += a * a;
    bb += b * b;
  }
  if (aa.is_zero() && bb.is_zero()) return Real(1L, bits);
  if (aa.is_zero() || bb.is_zero()) return Real::zero(bits);
  Real c = ab / sqrt(aa * bb);
  if (c < 0) return Real::zero(bits);
  if (c > 1) return Real(1L, bits);
  return c;
}

QPoly ivp_initial_profile(const QPoly& f, const QPoly& p, const QPoly& qden, const BigRational& nu,
                          const QBase& q) {
  return qden * q_derivative_poly(f, q) * BigRational(2 * nu) + p * f;
}

ResidualReport<Real> ivp_initial_profile(const std::function<Real(const Real&)>& f,
                                         const std::function<Real(const Real&)>& big_f,
                                         const std::vector<Real>& xs, const Real& nu, const QBase& q) {
  Grid grid;
  std::vector<Real> res;
  for (const auto& x : xs) {
    if (x.is_zero()) throw GridError("ivp_initial_profile: dilation is undefined at x = 0");
    const Real d = q_derivative_fn<Real>(f, x, q).value;
    res.push_back(d + big_f(x) * f(x) / (nu * 2L));
    grid.push_back({x, Real::zero(x.precision())});
  }
  return make_report(std::move(grid), std::move(res));
}

ResidualReport<Real> classical_burgers_residual(const VelocityField<Real>& u, const Grid& grid, const Real& nu,
                                                unsigned bits) {
  const unsigned work = bits + kGuardBits;
  std::vector<Real> res;
  for (const auto& p : grid) {
    const Real x = p.x.rounded(work);
    const Real t = p.t.rounded(work);
    const std::function<Real(const Real&)> along_x = [&](const Real& xx) { return u(xx, t); };
    const std::function<Real(const Real&)> along_t = [&](const Real& tt) { return u(x, tt); };
    const Real ux = time_derivative_fd(along_x, x, work);
    const Real uxx = second_derivative_fd(along_x, x, work);
    const Real ut = time_derivative_fd(along_t, t, work);
    res.push_back((ut + u(x, t) * ux - nu * uxx).rounded(bits));
  }
  return make_report(grid, std::move(res));
}

}  // namespace qcalc
