// q-numbers, q-factorials, the Jackson q-derivative and the dilation
// operator, on exact polynomials and on high-precision scalar functions.

#ifndef QCALC_QCORE_HPP_
#define QCALC_QCORE_HPP_

#include <functional>
#include <optional>

#include "qcalc/errors.hpp"
#include "qcalc/poly.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

// [n]_q = (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1); n at the sentinel.
BigRational q_number(unsigned n, const QBase& q);
// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
BigRational q_factorial(unsigned n, const QBase& q);
Real q_number(unsigned n, const QBase& q, unsigned bits);
Real q_factorial(unsigned n, const QBase& q, unsigned bits);

// x^n -> [n]_q x^(n-1), term by term. At the sentinel this is d/dx.
template <class R>
Poly<R> q_derivative_poly(const Poly<R>& p, const QBase& q) {
  if (p.degree() < 1) return Poly<R>();
  std::vector<R> v(static_cast<std::size_t>(p.degree()), R(0L));
  for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
    v[n - 1] = p.coeffs()[n] * R(q_number(static_cast<unsigned>(n), q));
  }
  return Poly<R>(std::move(v));
}

// D_x applied to every s-slice.
template <class R>
BiPoly<R> q_derivative_poly(const BiPoly<R>& p, const QBase& q) {
  return p.map_x([&](const Poly<R>& slice) { return q_derivative_poly(slice, q); });
}

// D_x^k.
template <class P>
P q_derivative_poly(const P& p, const QBase& q, unsigned k) {
  P r = p;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = q_derivative_poly(r, q);
  return r;
}

// p(qx). Requires an exact q.
template <class R>
Poly<R> dilate_poly(const Poly<R>& p, const QBase& q) {
  return p.scaled_argument(R(q.exact_value()));
}

// sum_j a^j D_x^(2j) p / j!. Terminates because D_x lowers the degree.
template <class R>
Poly<R> exp_q_laplacian(const Poly<R>& p, const R& a, const QBase& q) {
  Poly<R> acc;
  Poly<R> term = p;  // a^j D^(2j) p / j!
  for (long j = 0; !term.is_zero(); ++j) {
    acc += term;
    term = q_derivative_poly(term, q, 2) * R(a);
    term *= R(BigRational(1, j + 1));
  }
  return acc;
}

// sum_j s^j D_x^(2j) p / j! with s kept symbolic.
template <class R>
BiPoly<R> exp_q_laplacian_symbolic(const Poly<R>& p, const QBase& q) {
  std::vector<Poly<R>> slices;
  Poly<R> term = p;
  for (long j = 0; !term.is_zero(); ++j) {
    slices.push_back(term);
    term = q_derivative_poly(term, q, 2);
    term *= R(BigRational(1, j + 1));
  }
  return BiPoly<R>(std::move(slices));
}

// Applies exp_q_laplacian_symbolic to every s-slice and collects powers of
// s, i.e. e^(s D^2) acting on a polynomial already bivariate in (x, s).
template <class R>
BiPoly<R> exp_q_laplacian_symbolic(const BiPoly<R>& p, const QBase& q) {
  BiPoly<R> acc;
  for (std::size_t j = 0; j < p.slices().size(); ++j) {
    acc += exp_q_laplacian_symbolic(p.slices()[j], q).shifted_s(j);
  }
  return acc;
}

template <class T>
using ScalarFn = std::function<T(const T&)>;

// Result of a dilation quotient. `precision_loss` is raised when the
// difference f(qx) - f(x) cancelled more than half of the working digits.
template <class T>
struct QDerivative {
  T value;
  bool precision_loss = false;
  int cancelled_digits = 0;
};

// (f(qx) - f(x)) / ((q - 1) x), evaluated exactly as a difference quotient
// at the precision of x. x = 0 and the classical sentinel raise DomainError.
template <class T>
QDerivative<T> q_derivative_fn(const ScalarFn<T>& f, const T& x, const QBase& q);

// x -> f(qx).
template <class T>
ScalarFn<T> dilate(ScalarFn<T> f, const QBase& q) {
  return [f = std::move(f), q](const T& x) { return f(x * T(q.value(precision_of(x)))); };
}

// Horner evaluation. Exact when x is exact.
template <class R>
R poly_eval(const Poly<R>& p, const R& x) {
  return p.eval(x);
}
template <class R, class S>
S poly_eval(const Poly<R>& p, const S& x) {
  return p.eval_at(x);
}
// Bivariate evaluation; `s` may be omitted only when p does not depend on s.
template <class R>
R poly_eval(const BiPoly<R>& p, const R& x, const std::optional<R>& s) {
  if (!s) {
    if (p.s_degree() > 0) throw ArityError("bivariate polynomial needs a value for s");
    return p.slice(0).eval(x);
  }
  return p.at_s(*s).eval(x);
}
template <class R, class S>
S poly_eval(const BiPoly<R>& p, const S& x, const std::optional<S>& s) {
  if (!s) {
    if (p.s_degree() > 0) throw ArityError("bivariate polynomial needs a value for s");
    return p.slice(0).eval_at(x);
  }
  return p.eval_at(x, *s);
}

}  // namespace qcalc

#endif  // QCALC_QCORE_HPP_
