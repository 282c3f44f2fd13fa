// q-Cole-Hopf transformation u = -2 nu D_x phi / phi, the cubic-nonlinear
// q-Burgers equation it produces, and the shock solutions built from
// superpositions of plane waves.
//
// The equation is checked in the form
//
//   u_t - nu D^2 u = 1/2 G - 1/2 D_x(u(qx,t) u(x,t))
//                    + 1/(4 nu) (u(q^2 x,t) - u(x,T)) u(qx,t) u(x,t)
//
// where the first bracket G and the time argument T are read one of two
// ways each (see BurgersVariant):
//   kOpOnProduct   G = u(x) D_x u(x) - u(qx) D_x u(qx)     ((1 - M) acting on u D u)
//   kUTimesOpOnDu  G = u(x) (D_x u(x) - D_x u(qx))         (u times (1 - M) D u)
//   kPlainTime     T = t
//   kDilatedTime   T = q t
// variant_calibrate() decides which reading makes Cole-Hopf images of heat
// solutions exact; canonical_variant() caches the answer.

#ifndef QCALC_QBURGERS_HPP_
#define QCALC_QBURGERS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/qheat.hpp"
#include "qcalc/real.hpp"
#include "qcalc/residual.hpp"

namespace qcalc {

template <class T>
using VelocityField = Field<T>;

// u = -2 nu D_x phi / phi with D_x phi in closed form (so x = 0 is allowed).
// Evaluation raises PoleError where phi vanishes to working precision.
template <class T>
VelocityField<T> cole_hopf(const HeatSolution<T>& phi);
// Same for an arbitrary heat field, with D_x by dilation (GridError at x = 0).
template <class T>
VelocityField<T> cole_hopf(const Field<T>& phi, const QBase& q, const T& nu);

// Pieces of the equation at one point; every variant's residual is a
// combination of these.
template <class T>
struct BurgersTerms {
  T u_t, d2u, g_op_on_product, g_u_times_op, d_product, cubic_plain, cubic_dilated;
  T residual(const BurgersVariant& v) const;
};
template <class T>
BurgersTerms<T> burgers_terms(const VelocityField<T>& u, const GridPoint& p, const QBase& q, const T& nu,
                              unsigned bits);

// Pointwise residual (lhs - rhs). Omitting `variant` uses canonical_variant().
template <class T>
ResidualReport<T> burgers_residual(const VelocityField<T>& u, const Grid& grid, const QBase& q, const T& nu,
                                   unsigned bits, std::optional<BurgersVariant> variant = std::nullopt);

// Sweeps the four readings against five Cole-Hopf images of heat solutions
// (plane wave, static tanh_q shock, offset shock, N=4 multi-shock, H_2-based)
// on grids with t != 0. Returns the unique reading whose max residual is
// below 1e-15 for all of them; CalibrationError with the residual table
// otherwise.
struct CalibrationRow {
  BurgersVariant variant;
  std::vector<Real> max_residuals;  // one per test field
  bool pass = false;
};
struct CalibrationResult {
  BurgersVariant variant;
  std::vector<std::string> fields;
  std::vector<CalibrationRow> table;
};
CalibrationResult variant_calibrate_table(const QBase& q, const Real& nu, unsigned bits = kDefaultPrecisionBits);
BurgersVariant variant_calibrate(const QBase& q, const Real& nu, unsigned bits = kDefaultPrecisionBits);
// Calibrated once at q = 2, nu = 1 and frozen.
const BurgersVariant& canonical_variant();

// c + sum_n a_n e^(nu k_n^2 t) e_q(k_n x), the heat solution behind a shock.
template <class T>
struct ShockSpec {
  T offset;
  std::vector<WaveTerm<T>> terms;
  QBase q;
  T nu;

  // Terms come in (k, -k) pairs of equal amplitude and the offset is >= 0,
  // so the Cole-Hopf denominator is a positive sum of cosh_q terms.
  bool paired_regular() const;
  HeatSolution<T> heat_solution() const { return HeatSolution<T>::superposition(offset, terms, q, nu); }
};

VelocityField<Real> shock_single(const Real& k1, const Real& k2, const QBase& q, const Real& nu);
VelocityField<Real> shock_offset(const Real& c, const Real& k1, const Real& k2, const QBase& q, const Real& nu);
VelocityField<Real> shock_multi(const ShockSpec<Real>& spec);

// The unit-amplitude spec k = (1, -1, 2, -2) and the closed form
// -2 nu (sinh_q x + 2 e^(3 nu t) sinh_q 2x) / (cosh_q x + e^(3 nu t) cosh_q 2x).
ShockSpec<Real> four_wave_spec(const QBase& q, const Real& nu);
Real four_wave_closed_form(const Real& x, const Real& t, const QBase& q, const Real& nu);

// Sign changes of the Cole-Hopf denominator on a geometric x-grid (both
// signs, ratio 10^(1/points_per_decade), |x| from min_abs to max_abs, plus
// x = 0) and a linear t-grid. The denominator is separable in x and t, so
// e_q(k_n x_i) is evaluated once per x.
struct ScanAxes {
  Real x_min, x_max;  // signed range to scan
  Real min_abs;       // smallest |x| sampled on the geometric grid
  unsigned points_per_decade = 400;
  Real t_min, t_max;
  unsigned t_points = 11;
  unsigned bits = kDefaultPrecisionBits;
};
struct PoleBracket {
  Real t;
  Real x_lo, x_hi;
};
std::vector<PoleBracket> regularity_scan(const ShockSpec<Real>& spec, const ScanAxes& axes);

// Cosine similarity, clamped to [0, 1], of u sampled on `samples`
// log-spaced points of (x_lo, x_hi) and at the same points scaled by q^m.
// DomainError if either window hits a pole.
Real self_similarity_metric(const VelocityField<Real>& u, const QBase& q, const Real& t, const Real& x_lo,
                            const Real& x_hi, unsigned m, unsigned samples = 200);

// Initial-value reduction: a candidate f with (D_x + F / (2 nu)) f = 0.
// Exact form for polynomial f and rational F = P / Q: returns
// 2 nu Q D_x f + P f, the zero polynomial when f fits.
QPoly ivp_initial_profile(const QPoly& f, const QPoly& p, const QPoly& qden, const BigRational& nu,
                          const QBase& q);
// Pointwise form, D_x f by dilation (GridError at x = 0).
ResidualReport<Real> ivp_initial_profile(const std::function<Real(const Real&)>& f,
                                         const std::function<Real(const Real&)>& big_f,
                                         const std::vector<Real>& xs, const Real& nu, const QBase& q);

// u_t + u u_x - nu u_xx with classical finite-difference derivatives.
ResidualReport<Real> classical_burgers_residual(const VelocityField<Real>& u, const Grid& grid, const Real& nu,
                                                unsigned bits);

}  // namespace qcalc

#endif  // QCALC_QBURGERS_HPP_
