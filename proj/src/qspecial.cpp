#include "qcalc/qspecial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcalc/errors.hpp"

namespace qcalc {
namespace {

enum class Parts { kAll, kEven, kOdd };

// Hard cap on series length; e_q at the classical sentinel needs about
// e*|x| terms, so this only trips for absurd arguments.
constexpr unsigned kMaxTerms = 2'000'000;

int cancellation(const Real& max_partial, const Real& value) {
  if (value.is_zero()) return max_partial.is_zero() ? 0 : kTotalCancellation;
  const Real ratio = max_partial / abs(value);
  if (!(ratio > 1)) return 0;
  return static_cast<int>(std::floor(log10(ratio.rounded(64)).to_double()));
}

template <class T>
QSeriesEval<T> accumulate(const T& x, const QBase& q, Parts parts) {
  const unsigned bits = precision_of(x);
  const bool classical = q.classical_limit();
  const Real qv = q.value(bits);

  T term = T(Real(1L, bits));
  T sum = parts == Parts::kOdd ? T(Real::zero(bits)) : term;
  Real max_partial = abs(sum);
  Real number = Real::zero(bits);  // [n]_q
  unsigned n = 0;
  unsigned small_run = 0;
  while (small_run < 3) {
    ++n;
    if (n > kMaxTerms) throw PrecisionExhausted("e_q series did not converge");
    number = classical ? Real(static_cast<long>(n), bits) : number * qv + 1L;
    term = term * x / T(number);
    const bool used = parts == Parts::kAll || ((n % 2 == 0) == (parts == Parts::kEven));
    if (used) {
      sum += term;
      const Real mag = abs(sum);
      if (mag > max_partial) max_partial = mag;
    }
    if (abs(term) <= ldexp(max_partial, -static_cast<long>(bits))) {
      ++small_run;
    } else {
      small_run = 0;
    }
  }
  const Real next_number = classical ? Real(static_cast<long>(n + 1), bits) : number * qv + 1L;
  QSeriesEval<T> out{sum, n + 1, abs(term * x / T(next_number)), 0, bits};
  out.cancellation_digits = cancellation(max_partial, abs(sum));
  return out;
}

template <class T>
QSeriesEval<T> with_precision_policy(const T& x, const QBase& q, Parts parts) {
  const unsigned bits = precision_of(x);
  for (int attempt = 0; attempt <= 2; ++attempt) {
    const unsigned working = bits << attempt;
    QSeriesEval<T> r = accumulate(x.rounded(working), q, parts);
    if (r.cancellation_digits <= decimal_digits(working) / 2) {
      r.value = r.value.rounded(bits);
      r.truncation_bound = r.truncation_bound.rounded(bits);
      return r;
    }
  }
  throw PrecisionExhausted("e_q(" + x.to_string(20) + "): cancellation exceeds half of " +
                           std::to_string(bits << 2) + "-bit precision");
}

}  // namespace

template <class T>
QSeriesEval<T> e_q_series(const T& x, const QBase& q) {
  return accumulate(x, q, Parts::kAll);
}

template <class T>
QSeriesEval<T> e_q(const T& x, const QBase& q) {
  return with_precision_policy(x, q, Parts::kAll);
}

template <class T>
T e_q_absolute(const T& x, const QBase& q) {
  const unsigned bits = precision_of(x);
  return accumulate(x.rounded(bits + 64), q, Parts::kAll).value.rounded(bits);
}

template <class T>
QEvenOdd<T> e_q_parts(const T& x, const QBase& q) {
  return {with_precision_policy(x, q, Parts::kEven), with_precision_policy(x, q, Parts::kOdd)};
}

template <class T>
T sinh_q(const T& x, const QBase& q) {
  return with_precision_policy(x, q, Parts::kOdd).value;
}

template <class T>
T cosh_q(const T& x, const QBase& q) {
  return with_precision_policy(x, q, Parts::kEven).value;
}

template <class T>
T tanh_q(const T& x, const QBase& q) {
  const QSeriesEval<T> even = accumulate(x, q, Parts::kEven);
  if (even.cancellation_digits > decimal_digits(precision_of(x)) / 2) {
    const std::string at = x.to_string(30);
    throw PoleError("tanh_q: cosh_q vanishes to working precision at x = " + at, at, at);
  }
  return sinh_q(x, q) / even.value;
}

#define QCALC_INSTANTIATE(T)                                         \
  template QSeriesEval<T> e_q_series<T>(const T&, const QBase&);     \
  template QSeriesEval<T> e_q<T>(const T&, const QBase&);            \
  template T e_q_absolute<T>(const T&, const QBase&);                \
  template QEvenOdd<T> e_q_parts<T>(const T&, const QBase&);         \
  template T sinh_q<T>(const T&, const QBase&);                      \
  template T cosh_q<T>(const T&, const QBase&);                      \
  template T tanh_q<T>(const T&, const QBase&);
QCALC_INSTANTIATE(Real)
QCALC_INSTANTIATE(Complex)
#undef QCALC_INSTANTIATE

QSeriesEval<Real> ln_q(const Real& z, const QBase& q) {
  const unsigned bits = z.precision();
  if (z.is_zero()) throw DomainError("ln_q: requires 0 < |z|");
  if (q.classical_limit()) {
    if (!(z > -1)) throw DomainError("ln_q: classical log(1 + z) requires z > -1");
    return QSeriesEval<Real>{log1p(z), 1, Real::zero(bits), 0, bits};
  }
  const Real qv = q.value(bits);
  if (!(abs(z) < qv)) throw DomainError("ln_q: requires |z| < q");

  // |term_{N+1} / term_N| = |z| [N]_q / [N+1]_q < |z| / q.
  const Real ratio = abs(z) / qv;
  const Real tail_factor = z.sign() > 0 ? Real(1L, bits) : 1L / (1L - ratio);

  Real power = z;                 // z^N
  Real number(1L, bits);          // [N]_q
  Real sum = z;
  Real max_partial = abs(sum);
  unsigned n = 1;
  Real next = Real::zero(bits);
  for (;;) {
    ++n;
    if (n > kMaxTerms) throw PrecisionExhausted("ln_q series did not converge");
    power = -(power * z);
    number = number * qv + 1L;
    next = power / number;
    if (abs(next) * tail_factor <= ldexp(max_partial, -static_cast<long>(bits))) break;
    sum += next;
    const Real mag = abs(sum);
    if (mag > max_partial) max_partial = mag;
  }
  QSeriesEval<Real> out{sum, n - 1, abs(next) * tail_factor, 0, bits};
  out.cancellation_digits = cancellation(max_partial, sum);
  return out;
}

Real eq_zero_closed_form(const QBase& q, unsigned n, unsigned bits) {
  if (q.classical_limit()) throw DomainError("e_q has no real zeros at q = 1");
  const Real qv = q.value(bits);
  return -pow(qv, static_cast<long>(n + 1)) / (qv - 1L);
}

namespace {

// log2 of the largest term |x|^n / [n]_q! of the e_q series.
long peak_term_bits(const Real& x, const QBase& q) {
  const Real ax = abs(x).rounded(64);
  if (ax.is_zero()) return 0;
  const Real qv = q.value(64);
  const double lx = log(ax).to_double();
  Real number = Real::zero(64);
  double acc = 0.0;
  double peak = 0.0;
  for (unsigned n = 1; n < kMaxTerms; ++n) {
    number = number * qv + 1L;
    acc += lx - log(number).to_double();
    peak = std::max(peak, acc);
    if (acc < peak - 50.0) break;
  }
  return static_cast<long>(peak / 0.6931471805599453) + 1;
}

}  // namespace

std::vector<Real> zeros_of_eq(const QBase& q, unsigned n_max, unsigned bits) {
  if (q.classical_limit()) throw DomainError("e_q has no real zeros at q = 1");
  std::vector<Real> zeros;
  zeros.reserve(n_max + 1);
  const long target = -static_cast<long>(bits);
  for (unsigned n = 0; n <= n_max; ++n) {
    // Geometric half steps around the n-th lattice point; the bracket holds
    // exactly one zero and its ends sit away from the neighbouring zeros.
    const Real estimate = eq_zero_closed_form(q, n, 64) * sqrt(q.value(64));
    const unsigned work = bits + 64 + static_cast<unsigned>(std::max(0L, peak_term_bits(estimate, q)));

    const Real qv = q.value(work);
    const Real root_q = sqrt(qv);
    const Real base = pow(qv, static_cast<long>(n)) / (qv - 1L);
    Real lo = -(base * qv * root_q);
    Real hi = -(base * root_q);
    const int sign_lo = e_q_series(lo, q).value.sign();
    const int sign_hi = e_q_series(hi, q).value.sign();
    if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi) {
      throw PrecisionExhausted("zeros_of_eq: no sign change bracketing zero n = " + std::to_string(n));
    }
    for (;;) {
      Real mid = ldexp(lo + hi, -1);
      if (hi - lo <= ldexp(abs(mid), target)) break;
      const QSeriesEval<Real> f = e_q_series(mid, q);
      const int s = f.value.sign();
      if (s == 0 || f.cancellation_digits >= decimal_digits(work) - 2) {
        // The series no longer resolves a sign; the bracket must already be
        // within half of the requested precision.
        if (hi - lo > ldexp(abs(mid), target / 2)) {
          throw PrecisionExhausted("zeros_of_eq: sign of e_q unresolved near zero n = " +
                                   std::to_string(n));
        }
        break;
      }
      if (s == sign_lo) {
        lo = std::move(mid);
      } else {
        hi = std::move(mid);
      }
    }
    zeros.push_back(ldexp(lo + hi, -1).rounded(bits));
  }
  return zeros;
}

}  // namespace qcalc
