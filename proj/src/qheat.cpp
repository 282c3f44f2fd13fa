#include "qcalc/qheat.hpp"

#include <algorithm>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qhermite.hpp"
#include "qcalc/qspecial.hpp"

namespace qcalc {
namespace {

constexpr unsigned kGuardBits = 64;

unsigned point_bits(const Real& x, const Real& t) { return std::max(x.precision(), t.precision()); }

// D_x^2 f(x) = (f(q^2 x) - (1 + q) f(qx) + q f(x)) / (q (q - 1)^2 x^2)
template <class T>
T second_q_derivative(const std::function<T(const Real&)>& f, const Real& x, const QBase& q) {
  if (q.classical_limit()) throw DomainError("dilation quotient is undefined at q = 1");
  if (x.is_zero()) throw GridError("q-derivative by dilation is undefined at x = 0");
  const unsigned bits = x.precision();
  const Real qv = q.value(bits);
  const T f0 = f(x);
  const T f1 = f(x * qv);
  const T f2 = f(x * qv * qv);
  const Real qm1 = qv - 1L;
  return (f2 - f1 * T(qv + 1L) + f0 * T(qv)) / T(qv * qm1 * qm1 * x * x);
}

}  // namespace

std::string BurgersVariant::to_string() const {
  std::string g = grouping == Grouping::kOpOnProduct ? "op-on-product" : "u-times-op-on-du";
  std::string t = time_arg == TimeArg::kPlainTime ? "plain-time" : "dilated-time";
  return g + "/" + t;
}

Grid make_grid(const std::vector<Real>& xs, const std::vector<Real>& ts) {
  Grid g;
  g.reserve(xs.size() * ts.size());
  for (const auto& x : xs) {
    for (const auto& t : ts) g.push_back({x, t});
  }
  return g;
}

std::vector<Real> linspace(const Real& lo, const Real& hi, unsigned n, unsigned bits) {
  if (n < 2) return {lo.rounded(bits)};
  std::vector<Real> v;
  v.reserve(n);
  const Real a = lo.rounded(bits);
  const Real step = (hi.rounded(bits) - a) / static_cast<long>(n - 1);
  for (unsigned i = 0; i < n; ++i) v.push_back(a + step * static_cast<long>(i));
  return v;
}

template <class T>
HeatSolution<T> HeatSolution<T>::plane_wave(T k, QBase q, T nu) {
  HeatSolution s(Kind::kPlaneWave, std::move(q), std::move(nu));
  s.offset_ = T(Real::zero(kMinPrecisionBits));
  s.terms_.push_back({T(Real(1L, precision_of(k))), std::move(k)});
  return s;
}

template <class T>
HeatSolution<T> HeatSolution<T>::polynomial(BiQPoly p, QBase q, T nu) {
  HeatSolution s(Kind::kPolynomial, std::move(q), std::move(nu));
  s.poly_ = std::move(p);
  return s;
}

template <class T>
HeatSolution<T> HeatSolution<T>::superposition(T offset, std::vector<WaveTerm<T>> terms, QBase q, T nu) {
  for (const auto& term : terms) {
    if (term.amplitude.is_zero()) throw DomainError("superposition amplitudes must be nonzero");
  }
  HeatSolution s(Kind::kSuperposition, std::move(q), std::move(nu));
  s.offset_ = std::move(offset);
  s.terms_ = std::move(terms);
  return s;
}

// sum_n a_n k_n^p (nu k_n^2)^[times_k2nu] e^(nu k_n^2 t) e_q(k_n x)
template <class T>
T HeatSolution<T>::wave_sum(const Real& x, const Real& t, int k_power, bool times_k2nu) const {
  const unsigned bits = point_bits(x, t);
  T acc = T(Real::zero(bits));
  for (const auto& term : terms_) {
    const T k = term.k;
    const T rate = nu_ * k * k;
    T v = term.amplitude * exp(rate * T(t.rounded(bits))) * e_q_absolute(k * T(x.rounded(bits)), q_);
    for (int i = 0; i < k_power; ++i) v = v * k;
    if (times_k2nu) v = v * rate;
    acc += v;
  }
  return acc;
}

template <class T>
T HeatSolution<T>::value(const Real& x, const Real& t) const {
  const unsigned bits = point_bits(x, t);
  if (kind_ == Kind::kPolynomial) {
    return poly_.eval_at(T(x.rounded(bits)), nu_ * T(t.rounded(bits)));
  }
  T v = wave_sum(x, t, 0, false);
  if (kind_ == Kind::kSuperposition) v += offset_;
  return v;
}

template <class T>
T HeatSolution<T>::dx(const Real& x, const Real& t) const {
  const unsigned bits = point_bits(x, t);
  if (kind_ == Kind::kPolynomial) {
    return q_derivative_poly(poly_, q_).eval_at(T(x.rounded(bits)), nu_ * T(t.rounded(bits)));
  }
  return wave_sum(x, t, 1, false);
}

template <class T>
T HeatSolution<T>::dt(const Real& x, const Real& t) const {
  const unsigned bits = point_bits(x, t);
  if (kind_ == Kind::kPolynomial) {
    return nu_ * poly_.derivative_s().eval_at(T(x.rounded(bits)), nu_ * T(t.rounded(bits)));
  }
  return wave_sum(x, t, 0, true);
}

template <class T>
Field<T> HeatSolution<T>::as_field() const {
  return [self = *this](const Real& x, const Real& t) { return self.value(x, t); };
}

template <class T>
ResidualReport<T> heat_residual(const HeatSolution<T>& sol, const Grid& grid) {
  std::vector<T> res;
  res.reserve(grid.size());
  if (sol.kind() == HeatSolution<T>::Kind::kPolynomial) {
    const BiQPoly r = heat_residual_poly(sol.poly(), sol.q());
    for (const auto& p : grid) {
      const unsigned bits = point_bits(p.x, p.t);
      res.push_back(sol.nu() * r.eval_at(T(p.x.rounded(bits)), sol.nu() * T(p.t.rounded(bits))));
    }
    return make_report(grid, std::move(res));
  }
  for (const auto& p : grid) {
    const unsigned bits = point_bits(p.x, p.t);
    const unsigned work = bits + kGuardBits;
    const Real t = p.t.rounded(work);
    const std::function<T(const Real&)> f = [&](const Real& x) { return sol.value(x, t); };
    const T d2 = second_q_derivative(f, p.x.rounded(work), sol.q());
    res.push_back((sol.dt(p.x.rounded(work), t) - sol.nu() * d2).rounded(bits));
  }
  return make_report(grid, std::move(res));
}

template <class T>
ResidualReport<T> heat_residual(const Field<T>& phi, const Grid& grid, const QBase& q, const T& nu,
                                unsigned bits) {
  std::vector<T> res;
  res.reserve(grid.size());
  const unsigned work = bits + kGuardBits;
  for (const auto& p : grid) {
    const Real x = p.x.rounded(work);
    const Real t = p.t.rounded(work);
    const std::function<T(const Real&)> fx = [&](const Real& xx) { return phi(xx, t); };
    const std::function<T(const Real&)> ft = [&](const Real& tt) { return phi(x, tt); };
    const T d2 = second_q_derivative(fx, x, q);
    res.push_back((time_derivative_fd(ft, t, work) - nu * d2).rounded(bits));
  }
  return make_report(grid, std::move(res));
}

template class HeatSolution<Real>;
template class HeatSolution<Complex>;
template ResidualReport<Real> heat_residual(const HeatSolution<Real>&, const Grid&);
template ResidualReport<Complex> heat_residual(const HeatSolution<Complex>&, const Grid&);
template ResidualReport<Real> heat_residual(const Field<Real>&, const Grid&, const QBase&, const Real&,
                                            unsigned);
template ResidualReport<Complex> heat_residual(const Field<Complex>&, const Grid&, const QBase&,
                                               const Complex&, unsigned);

BiQPoly heat_residual_poly(const BiQPoly& p, const QBase& q) {
  return p.derivative_s() - q_derivative_poly(p, q, 2);
}

std::vector<BiQPoly> kdf_from_generating(unsigned k_order, const QBase& q) {
  // e^(s k^2): s^j / j! at k^(2j).   e_q(kx): x^m / [m]! at k^m.
  std::vector<BiQPoly> exp_part(k_order / 2 + 1);
  BigRational jf(1);
  for (unsigned j = 0; j < exp_part.size(); ++j) {
    if (j > 0) jf *= j;
    exp_part[j] = BiQPoly::monomial(1 / jf, 0, j);
  }
  std::vector<BiQPoly> out;
  for (unsigned n = 0; n <= k_order; ++n) {
    BiQPoly c;
    for (unsigned j = 0; 2 * j <= n; ++j) {
      c += exp_part[j] * BiQPoly::monomial(1 / q_factorial(n - 2 * j, q), n - 2 * j, 0);
    }
    out.push_back(c * q_factorial(n, q));
  }
  return out;
}

Prop1Check prop1_check(unsigned m, const QBase& q) {
  const BigRational two = q_number(2, q);
  const BigRational a = BigRational(-1) / (two * two);
  const std::size_t order = 2 * static_cast<std::size_t>(m);

  // e_q([2] x t) through t^(2M); the auxiliary variable carries t.
  std::vector<QPoly> slices;
  for (std::size_t n = 0; n <= order; ++n) {
    slices.push_back(QPoly::monomial(pow(two, static_cast<unsigned>(n)) / q_factorial(static_cast<unsigned>(n), q), n));
  }
  const BiQPoly eq(std::move(slices));

  std::vector<QPoly> gauss(order + 1);
  BigRational jf(1);
  for (std::size_t j = 0; 2 * j <= order; ++j) {
    if (j > 0) jf *= static_cast<unsigned long>(j);
    gauss[2 * j] = QPoly::constant(BigRational((j % 2 ? -1 : 1)) / jf);
  }

  Prop1Check out;
  out.lhs = eq.map_x([&](const QPoly& p) { return exp_q_laplacian(p, a, q); }).truncated_s(order);
  out.rhs = (BiQPoly(std::move(gauss)) * eq).truncated_s(order);
  out.mismatch = first_mismatch(out.lhs, out.rhs);
  out.pass = !out.mismatch.has_value();
  return out;
}

QPoly evolution_apply(const QPoly& p, const QBase& q, const BigRational& s) {
  return exp_q_laplacian(p, s, q);
}

BiQPoly evolution_symbolic(const QPoly& p, const QBase& q) { return exp_q_laplacian_symbolic(p, q); }

HeatSolution<Real> solve_ivp_series(const std::vector<BigRational>& a, const QBase& q, const Real& nu) {
  BiQPoly p;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] != 0) p += kdf_explicit(static_cast<unsigned>(n), q) * a[n];
  }
  return HeatSolution<Real>::polynomial(std::move(p), q, nu);
}

QPoly hermite_series_transform(const std::vector<BigRational>& a, const QBase& q) {
  const BigRational two = q_number(2, q);
  QPoly out;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    out += hermite_explicit(static_cast<unsigned>(n), q) * BigRational(a[n] / pow(two, static_cast<unsigned>(n)));
  }
  return out;
}

QPoly hermite_series_direct(const std::vector<BigRational>& a, const QBase& q) {
  const BigRational two = q_number(2, q);
  return exp_q_laplacian(QPoly(a), BigRational(BigRational(-1) / (two * two)), q);
}

}  // namespace qcalc
