// q-Hermite H_N(x;q) and q-Kampe-de Feriet H_N(x,s;q) polynomials (s = nu*t),
// each built by several independent routes so they can be cross-checked
// coefficient by coefficient.

#ifndef QCALC_QHERMITE_HPP_
#define QCALC_QHERMITE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

enum class HermiteRoute { kExplicitSum, kNTermRecurrence, kOperatorProduct, kHeatOperator, kGenerating };

const char* to_string(HermiteRoute route);

template <class P>
struct PolyFamily {
  QBase q;
  HermiteRoute route = HermiteRoute::kExplicitSum;
  std::vector<P> polys;  // polys[N]

  const P& operator[](std::size_t n) const { return polys.at(n); }
  std::size_t size() const { return polys.size(); }
};

using HermiteFamily = PolyFamily<QPoly>;
using KdfFamily = PolyFamily<BiQPoly>;

// sum_k (-1)^k ([2]x)^(N-2k) [N]! / (k! [N-2k]!)
QPoly hermite_explicit(unsigned n, const QBase& q);
HermiteFamily hermite_explicit_family(unsigned n_max, const QBase& q);

// The multi-term recurrence with the sum over k <= N-2, started from H_0 = 1.
HermiteFamily hermite_nterm_recurrence(unsigned n_max, const QBase& q);

// [2]^N exp(-D^2/[2]^2) x^N; the exponential truncates on polynomials.
QPoly hermite_operator_rep(unsigned n, const QBase& q);
HermiteFamily hermite_heat_operator_family(unsigned n_max, const QBase& q);

// Repeated application of the one-step operator
//   [N+1]/(N+1) ([2]x - (2/[2] + (q-1)x^2) D + sum_{l=2}^N (1-q^2)^l x^(l+1) / ([2]^(l-1) [l+1]) D^l)
HermiteFamily hermite_operator_product(unsigned n_max, const QBase& q);

// [N]! times the t^N coefficient of e^(-t^2) e_q([2] t x), via a Cauchy
// product of the two truncated series.
HermiteFamily hermite_from_generating(unsigned m, const QBase& q);

// Physicists' Hermite polynomials from 2x H_N - 2N H_(N-1).
QPoly classical_hermite(unsigned n);

// D_x H_N == [2][N] H_(N-1), N >= 1.
bool hermite_rec2_check(unsigned n, const QBase& q);
// (x d/dx - N) H_N == 2 [N][N-1] H_(N-2) with the classical d/dx, N >= 2.
bool hermite_rec3_check(unsigned n, const QBase& q);
// 2 D^2 H_N - [2]^2 x dH_N/dx + [2]^2 N H_N; the zero polynomial when the
// identity holds.
QPoly qdiff_equation_check(unsigned n, const QBase& q);

// sum_k s^k x^(N-2k) [N]! / (k! [N-2k]!)
BiQPoly kdf_explicit(unsigned n, const QBase& q);
KdfFamily kdf_explicit_family(unsigned n_max, const QBase& q);
KdfFamily kdf_nterm_recurrence(unsigned n_max, const QBase& q);

// The one-step operator form
//   [N+1]/(N+1) [x + (2s + (1-q)/[2] x^2) D + sum_{l=2}^N (1-q^2)^l x^(l+1) / ([2]^l d_l) D^l]
// with d_l = [l] as printed or d_l = [l+1], the reading that agrees with the
// recurrence and the explicit sum.
enum class KdfOperatorReading { kAsPrinted, kConsistent };
KdfFamily kdf_operator_product(unsigned n_max, const QBase& q, KdfOperatorReading reading);

// H_N(x, nu t) == (-nu t)^(N/2) H_N(x / ([2] sqrt(-nu t))) at each sample.
struct ScalingSample {
  Real x, nu, t;
};
struct ScalingCheck {
  bool pass = false;
  Real max_rel_error;
};
ScalingCheck kdf_scaling_check(unsigned n, const QBase& q, const std::vector<ScalingSample>& samples);

// Description of the first differing coefficient, or nullopt when equal.
std::optional<std::string> first_mismatch(const QPoly& a, const QPoly& b);
std::optional<std::string> first_mismatch(const BiQPoly& a, const BiQPoly& b);
// First N whose polynomials differ between two families.
std::optional<std::string> first_mismatch(const HermiteFamily& a, const HermiteFamily& b);
std::optional<std::string> first_mismatch(const KdfFamily& a, const KdfFamily& b);

}  // namespace qcalc

#endif  // QCALC_QHERMITE_HPP_
