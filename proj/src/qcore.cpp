#include "qcalc/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcalc {
namespace {

long magnitude2(const Real& x) { return x.is_zero() ? std::numeric_limits<long>::min() : x.exponent2(); }

}  // namespace

BigRational q_number(unsigned n, const QBase& q) {
  if (q.classical_limit()) return BigRational(static_cast<long>(n));
  const BigRational base = q.exact_value();
  BigRational sum(0);
  BigRational power(1);
  for (unsigned k = 0; k < n; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

BigRational q_factorial(unsigned n, const QBase& q) {
  BigRational r(1);
  for (unsigned k = 2; k <= n; ++k) r *= q_number(k, q);
  return r;
}

Real q_number(unsigned n, const QBase& q, unsigned bits) {
  if (q.classical_limit()) return Real(static_cast<long>(n), bits);
  const Real base = q.value(bits);
  Real acc = Real::zero(bits);
  for (unsigned k = 0; k < n; ++k) acc = acc * base + 1L;
  return acc;
}

Real q_factorial(unsigned n, const QBase& q, unsigned bits) {
  Real r(1L, bits);
  if (q.classical_limit()) {
    for (unsigned k = 2; k <= n; ++k) r *= static_cast<long>(k);
    return r;
  }
  const Real base = q.value(bits);
  Real number(1L, bits);
  for (unsigned k = 2; k <= n; ++k) {
    number = number * base + 1L;
    r *= number;
  }
  return r;
}

template <class T>
QDerivative<T> q_derivative_fn(const ScalarFn<T>& f, const T& x, const QBase& q) {
  if (q.classical_limit()) {
    throw DomainError("q-derivative by dilation is undefined at the classical sentinel q = 1");
  }
  if (x.is_zero()) {
    throw DomainError("q-derivative by dilation is undefined at x = 0");
  }
  const unsigned bits = precision_of(x);
  const Real qv = q.value(bits);
  const T fx = f(x);
  const T fqx = f(x * T(qv));
  const T diff = fqx - fx;

  QDerivative<T> out{diff / (x * T(qv - 1L))};
  const long big = std::max(magnitude2(abs(fx)), magnitude2(abs(fqx)));
  if (big != std::numeric_limits<long>::min()) {
    const Real d = abs(diff);
    const long lost_bits = d.is_zero() ? static_cast<long>(bits) : big - d.exponent2();
    out.cancelled_digits = std::max(0, decimal_digits(static_cast<unsigned>(std::max(0L, lost_bits))));
    out.precision_loss = out.cancelled_digits > decimal_digits(bits) / 2;
  }
  return out;
}

template QDerivative<Real> q_derivative_fn<Real>(const ScalarFn<Real>&, const Real&, const QBase&);
template QDerivative<Complex> q_derivative_fn<Complex>(const ScalarFn<Complex>&, const Complex&,
                                                       const QBase&);

}  // namespace qcalc
