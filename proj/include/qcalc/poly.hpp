// Dense exact polynomials in x, optionally bivariate in x and an auxiliary
// variable s (s = nu*t for heat polynomials, s = t for the complex family).
//
// Coefficient rings: BigRational or GaussianRational. Trailing zeros are
// always trimmed, so the zero polynomial has no coefficients and
// degree() == -1.

#ifndef QCALC_POLY_HPP_
#define QCALC_POLY_HPP_

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

// Embeds an exact coefficient into a floating scalar of the given precision.
template <class S>
S lift(const BigRational& c, unsigned bits) {
  return S(Real(c, bits));
}
template <class S>
S lift(const GaussianRational& c, unsigned bits);
template <>
inline Complex lift<Complex>(const GaussianRational& c, unsigned bits) {
  return to_complex(c, bits);
}

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly monomial(R c, std::size_t n) {
    std::vector<R> v(n + 1, R(0L));
    v[n] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1L), 1); }

  const std::vector<R>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(std::size_t n) const { return n < c_.size() ? c_[n] : R(0L); }
  const R& leading() const { return c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Classical d/dx.
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1, R(0L));
    for (std::size_t n = 1; n < c_.size(); ++n) v[n - 1] = c_[n] * R(static_cast<long>(n));
    return Poly(std::move(v));
  }
  // p(x) * x^k
  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<R> v(k, R(0L));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  // p(a x)
  Poly scaled_argument(const R& a) const {
    Poly r(*this);
    R power(1L);
    for (auto& c : r.c_) {
      c *= power;
      power *= a;
    }
    r.trim();
    return r;
  }
  // Keeps powers x^0..x^max_degree.
  Poly truncated(std::size_t max_degree) const {
    if (c_.size() <= max_degree + 1) return *this;
    return Poly(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(max_degree) + 1));
  }

  R eval(const R& x) const {
    R acc(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  template <class S>
  S eval_at(const S& x) const {
    const unsigned bits = precision_of(x);
    S acc = S(Real::zero(bits));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift<S>(*it, bits);
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = c_.size(); n-- > 0;) {
      if (is_zero(c_[n])) continue;
      if (!first) os << " + ";
      os << "(" << qcalc::to_string(c_[n]) << ")";
      if (n > 0) os << "x^" << n;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  static bool is_zero(const R& r) { return qcalc::is_zero(r); }

  std::vector<R> c_;
};

// Polynomial in x and s, stored as slices P_j(x) with p = sum_j P_j(x) s^j.
template <class R>
class BiPoly {
 public:
  using Slice = Poly<R>;

  BiPoly() = default;
  explicit BiPoly(Slice p) {
    if (!p.is_zero()) s_.push_back(std::move(p));
  }
  explicit BiPoly(std::vector<Slice> slices) : s_(std::move(slices)) { trim(); }
  static BiPoly monomial(R c, std::size_t x_power, std::size_t s_power) {
    std::vector<Slice> v(s_power + 1);
    v[s_power] = Slice::monomial(std::move(c), x_power);
    return BiPoly(std::move(v));
  }

  const std::vector<Slice>& slices() const { return s_; }
  bool is_zero() const { return s_.empty(); }
  // Degree in s (-1 for zero).
  int s_degree() const { return static_cast<int>(s_.size()) - 1; }
  int x_degree() const {
    int d = -1;
    for (const auto& p : s_) d = std::max(d, p.degree());
    return d;
  }
  Slice slice(std::size_t j) const { return j < s_.size() ? s_[j] : Slice(); }
  R coeff(std::size_t x_power, std::size_t s_power) const { return slice(s_power).coeff(x_power); }

  BiPoly& operator+=(const BiPoly& o) {
    if (o.s_.size() > s_.size()) s_.resize(o.s_.size());
    for (std::size_t j = 0; j < o.s_.size(); ++j) s_[j] += o.s_[j];
    trim();
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    if (o.s_.size() > s_.size()) s_.resize(o.s_.size());
    for (std::size_t j = 0; j < o.s_.size(); ++j) s_[j] -= o.s_[j];
    trim();
    return *this;
  }
  BiPoly& operator*=(const R& c) {
    for (auto& p : s_) p *= c;
    trim();
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const R& c) { return a *= c; }
  friend BiPoly operator*(const R& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<Slice> v(a.s_.size() + b.s_.size() - 1);
    for (std::size_t i = 0; i < a.s_.size(); ++i) {
      for (std::size_t j = 0; j < b.s_.size(); ++j) v[i + j] += a.s_[i] * b.s_[j];
    }
    return BiPoly(std::move(v));
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.s_ == b.s_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // Applies a linear map on polynomials in x to every s-slice.
  template <class F>
  BiPoly map_x(F&& f) const {
    std::vector<Slice> v;
    v.reserve(s_.size());
    for (const auto& p : s_) v.push_back(f(p));
    return BiPoly(std::move(v));
  }
  // Classical d/ds.
  BiPoly derivative_s() const {
    if (s_.size() <= 1) return BiPoly();
    std::vector<Slice> v(s_.size() - 1);
    for (std::size_t j = 1; j < s_.size(); ++j) v[j - 1] = s_[j] * R(static_cast<long>(j));
    return BiPoly(std::move(v));
  }
  // Multiplies by s^k.
  BiPoly shifted_s(std::size_t k) const {
    if (is_zero()) return BiPoly();
    std::vector<Slice> v(k);
    v.insert(v.end(), s_.begin(), s_.end());
    return BiPoly(std::move(v));
  }
  // Keeps s^0..s^max_power.
  BiPoly truncated_s(std::size_t max_power) const {
    if (s_.size() <= max_power + 1) return *this;
    return BiPoly(std::vector<Slice>(s_.begin(), s_.begin() + static_cast<long>(max_power) + 1));
  }
  // Substitutes an exact value for s.
  Slice at_s(const R& s) const {
    Slice acc;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
  template <class S>
  S eval_at(const S& x, const S& s) const {
    S acc = S(Real::zero(std::max(precision_of(x), precision_of(s))));
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) acc = acc * s + it->eval_at(x);
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < s_.size(); ++j) {
      if (s_[j].is_zero()) continue;
      if (!first) os << " + ";
      os << "[" << s_[j].to_string() << "]";
      if (j > 0) os << "s^" << j;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!s_.empty() && s_.back().is_zero()) s_.pop_back();
  }

  std::vector<Slice> s_;
};

using QPoly = Poly<BigRational>;
using BiQPoly = BiPoly<BigRational>;
using GaussPoly = Poly<GaussianRational>;
using BiGaussPoly = BiPoly<GaussianRational>;

}  // namespace qcalc

#endif  // QCALC_POLY_HPP_
