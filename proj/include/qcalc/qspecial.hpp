// Jackson q-exponential and the functions built from it.

#ifndef QCALC_QSPECIAL_HPP_
#define QCALC_QSPECIAL_HPP_

#include <vector>

#include "qcalc/qbase.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

// Series evaluation metadata.
//   truncation_bound     magnitude of the first omitted term (or a tail
//                        bound where the series is not alternating)
//   cancellation_digits  log10(max |partial sum| / |value|), floored at 0
template <class T>
struct QSeriesEval {
  T value;
  unsigned terms_used = 0;
  Real truncation_bound;
  int cancellation_digits = 0;
  // Precision the accepted evaluation ran at (may exceed the input's after
  // automatic doubling).
  unsigned working_bits = 0;
};

// Cancellation reported when the sum is exactly zero.
inline constexpr int kTotalCancellation = 1 << 20;

// Raw truncated series sum_n x^n / [n]_q! at the precision of x, stopping
// after three consecutive terms below 2^-bits * max|partial|. Never throws
// for cancellation; callers that need sign information only (root finding,
// pole scans) use this directly.
template <class T>
QSeriesEval<T> e_q_series(const T& x, const QBase& q);

// e_q(x) with the precision policy: when cancellation exceeds half of the
// working digits the evaluation is repeated at double precision, at most
// twice, then PrecisionExhausted is thrown. The value is returned at the
// precision of x.
template <class T>
QSeriesEval<T> e_q(const T& x, const QBase& q);

// e_q(x) to absolute accuracy 2^-bits * max|partial sum|: the raw series
// with 64 guard bits, rounded back. For terms of a sum, where a vanishing
// e_q value (on its zero lattice) is harmless and the relative policy of
// e_q() would throw.
template <class T>
T e_q_absolute(const T& x, const QBase& q);

// Even and odd parts of the e_q series, summed separately so that neither
// suffers the cancellation of (e_q(x) -/+ e_q(-x))/2.
template <class T>
struct QEvenOdd {
  QSeriesEval<T> even;  // cosh_q
  QSeriesEval<T> odd;   // sinh_q
};
template <class T>
QEvenOdd<T> e_q_parts(const T& x, const QBase& q);

template <class T>
T sinh_q(const T& x, const QBase& q);
template <class T>
T cosh_q(const T& x, const QBase& q);
// Throws PoleError when cosh_q(x) vanishes to working precision.
template <class T>
T tanh_q(const T& x, const QBase& q);

// Ln_q(1 + z) = sum_{N>=1} (-1)^(N-1) z^N / [N]_q for 0 < |z| < q.
// At the classical sentinel this is log(1 + z) (requires z > -1).
QSeriesEval<Real> ln_q(const Real& z, const QBase& q);

// The first n_max + 1 negative real zeros of e_q, each located by bisection
// of the series and returned at `bits` precision. Throws PrecisionExhausted
// when the sign of the series cannot be resolved before the bracket shrinks
// to 2^-bits relative width.
std::vector<Real> zeros_of_eq(const QBase& q, unsigned n_max, unsigned bits = kDefaultPrecisionBits);

// Closed-form zero lattice -q^(n+1)/(q-1), n = 0, 1, ...
Real eq_zero_closed_form(const QBase& q, unsigned n, unsigned bits = kDefaultPrecisionBits);

}  // namespace qcalc

#endif  // QCALC_QSPECIAL_HPP_
