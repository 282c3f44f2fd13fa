// The q-heat equation  d/dt phi = nu D_x^2 phi: plane waves, polynomial
// (q-Kampe-de Feriet) solutions, the evolution operator e^(nu t D^2) and
// the Hermite-series identities built on it.

#ifndef QCALC_QHEAT_HPP_
#define QCALC_QHEAT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/real.hpp"
#include "qcalc/residual.hpp"

namespace qcalc {

template <class T>
struct WaveTerm {
  T amplitude;
  T k;
};

// phi(x, t) in one of three closed forms:
//   PlaneWave      e^(nu k^2 t) e_q(k x)
//   Polynomial     P(x, s) with s = nu t (exact rational coefficients)
//   Superposition  c + sum_n a_n e^(nu k_n^2 t) e_q(k_n x)
// Evaluation runs at the larger of the precisions of x and t.
template <class T>
class HeatSolution {
 public:
  enum class Kind { kPlaneWave, kPolynomial, kSuperposition };

  static HeatSolution plane_wave(T k, QBase q, T nu);
  static HeatSolution polynomial(BiQPoly p, QBase q, T nu);
  // Zero amplitudes are rejected (DomainError).
  static HeatSolution superposition(T offset, std::vector<WaveTerm<T>> terms, QBase q, T nu);

  Kind kind() const { return kind_; }
  const QBase& q() const { return q_; }
  const T& nu() const { return nu_; }
  const T& offset() const { return offset_; }
  const std::vector<WaveTerm<T>>& terms() const { return terms_; }
  const BiQPoly& poly() const { return poly_; }

  T value(const Real& x, const Real& t) const;
  // D_x phi in closed form (D_x e_q(kx) = k e_q(kx)); valid at x = 0.
  T dx(const Real& x, const Real& t) const;
  // d/dt phi in closed form.
  T dt(const Real& x, const Real& t) const;

  Field<T> as_field() const;

 private:
  HeatSolution(Kind kind, QBase q, T nu) : kind_(kind), q_(std::move(q)), nu_(std::move(nu)) {}
  T wave_sum(const Real& x, const Real& t, int k_power, bool times_k2nu) const;

  Kind kind_;
  QBase q_;
  T nu_;
  T offset_;
  std::vector<WaveTerm<T>> terms_;
  BiQPoly poly_;
};

template <class T>
HeatSolution<T> plane_wave(const T& k, const QBase& q, const T& nu) {
  return HeatSolution<T>::plane_wave(k, q, nu);
}

// Pointwise (d/dt - nu D_x^2) phi. Polynomial solutions use the exact
// residual polynomial (x = 0 allowed); the others use dilation quotients for
// D_x^2 with 64 guard bits and the closed-form time derivative, and raise
// GridError at x = 0.
template <class T>
ResidualReport<T> heat_residual(const HeatSolution<T>& sol, const Grid& grid);
// Same for an arbitrary field; d/dt by Richardson-extrapolated finite
// differences at `bits`.
template <class T>
ResidualReport<T> heat_residual(const Field<T>& phi, const Grid& grid, const QBase& q, const T& nu,
                                unsigned bits);

// (d/ds - D_x^2) P for P(x, s); zero exactly for polynomial solutions.
BiQPoly heat_residual_poly(const BiQPoly& p, const QBase& q);

// [N]! times the k^N coefficient of e^(s k^2) e_q(k x), N = 0..k_order.
std::vector<BiQPoly> kdf_from_generating(unsigned k_order, const QBase& q);

// e^(-D^2/[2]^2) e_q([2] x t) == e^(-t^2) e_q([2] x t), compared as exact
// truncations through t^(2M) with t carried in the auxiliary variable.
struct Prop1Check {
  bool pass = false;
  BiQPoly lhs;
  BiQPoly rhs;
  std::optional<std::string> mismatch;
};
Prop1Check prop1_check(unsigned m, const QBase& q);

// e^(s D^2) p for an exact s = nu t.
QPoly evolution_apply(const QPoly& p, const QBase& q, const BigRational& s);
// Same with s symbolic.
BiQPoly evolution_symbolic(const QPoly& p, const QBase& q);

// sum_n a_n H_n(x, s; q), the solution with phi(x, 0) = sum_n a_n x^n.
HeatSolution<Real> solve_ivp_series(const std::vector<BigRational>& a, const QBase& q, const Real& nu);

// sum_N a_N H_N(x;q) / [2]^N.
QPoly hermite_series_transform(const std::vector<BigRational>& a, const QBase& q);
// e^(-D^2/[2]^2) applied directly to sum_N a_N x^N.
QPoly hermite_series_direct(const std::vector<BigRational>& a, const QBase& q);

}  // namespace qcalc

#endif  // QCALC_QHEAT_HPP_
