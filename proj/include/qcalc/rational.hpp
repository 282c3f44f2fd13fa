// Exact rational and Gaussian-rational scalars.

#ifndef QCALC_RATIONAL_HPP_
#define QCALC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qcalc/real.hpp"

namespace qcalc {

// GMP keeps mpq_class in lowest terms with a positive denominator as long as
// values are built through arithmetic or `make_rational`.
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational pow(const BigRational& base, unsigned n);
// Accepts integers, ratios ("3/2") and decimal literals with optional
// exponent ("1.000001", "1e-6", "-0.25"). Decimals are converted exactly.
// Throws std::invalid_argument on malformed input.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re)  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)) {}
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re)  // NOLINT(google-explicit-constructor)
      : re_(re) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& real() const { return re_; }
  const BigRational& imag() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  BigRational re_{0};
  BigRational im_{0};
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
GaussianRational pow(const GaussianRational& base, unsigned n);
std::string to_string(const GaussianRational& z);

// Conversions to floating scalars at a given precision.
inline Real to_real(const BigRational& r, unsigned bits) { return Real(r, bits); }
inline Complex to_complex(const BigRational& r, unsigned bits) { return Complex(Real(r, bits)); }
inline Complex to_complex(const GaussianRational& z, unsigned bits) {
  return {Real(z.real(), bits), Real(z.imag(), bits)};
}

// True for the zero element of either coefficient ring.
inline bool is_zero(const BigRational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

}  // namespace qcalc

#endif  // QCALC_RATIONAL_HPP_
