// Arbitrary-precision real and complex scalars backed by MPFR.
//
// Every value carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions, so mixing a 256-bit and a
// 512-bit value never silently drops bits. There is no global precision
// state: the default precision is a compile-time constant.

#ifndef QCALC_REAL_HPP_
#define QCALC_REAL_HPP_

#include <mpfr.h>

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace qcalc {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

class Real {
 public:
  Real() : Real(0L) {}
  static Real zero(unsigned bits);
  explicit Real(long value, unsigned bits = kDefaultPrecisionBits);
  explicit Real(int value, unsigned bits = kDefaultPrecisionBits)
      : Real(static_cast<long>(value), bits) {}
  explicit Real(double value, unsigned bits = kDefaultPrecisionBits);
  explicit Real(const mpq_class& value, unsigned bits = kDefaultPrecisionBits);
  explicit Real(const mpz_class& value, unsigned bits = kDefaultPrecisionBits);
  // Parses a decimal literal ("1e-20", "-3.25") or a ratio "a/b".
  // Throws std::invalid_argument on malformed input.
  static Real parse(std::string_view text, unsigned bits = kDefaultPrecisionBits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  // Copy of this value rounded to `bits`.
  Real rounded(unsigned bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Base-2 exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits (0 = all digits
  // implied by the precision).
  std::string to_string(int digits = 0) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

// Complex number with Real parts; precision is the larger of the two parts.
class Complex {
 public:
  Complex() : re_(0L), im_(0L) {}
  static Complex zero(unsigned bits) { return {Real::zero(bits), Real::zero(bits)}; }
  Complex(const Real& re)  // NOLINT(google-explicit-constructor): real embeds in complex
      : re_(re), im_(Real::zero(re.precision())) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  unsigned precision() const;
  Complex rounded(unsigned bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re_, -im_}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::string to_string(int digits = 0) const;

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator*(long a, const Complex& b);
Complex operator-(long a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex ldexp(const Complex& z, long e);
inline Complex imaginary_unit(unsigned bits = kDefaultPrecisionBits) {
  return {Real(0L, bits), Real(1L, bits)};
}

std::ostream& operator<<(std::ostream& os, const Complex& z);

// Generic helpers so that algorithms can be written once for Real and
// Complex scalars.
inline Real real_part(const Real& x) { return x; }
inline Real real_part(const Complex& z) { return z.real(); }
inline Real imag_part(const Real& x) { return Real(0L, x.precision()); }
inline Real imag_part(const Complex& z) { return z.imag(); }
inline unsigned precision_of(const Real& x) { return x.precision(); }
inline unsigned precision_of(const Complex& z) { return z.precision(); }

// Number of decimal digits represented by `bits` binary digits.
int decimal_digits(unsigned bits);

}  // namespace qcalc

#endif  // QCALC_REAL_HPP_
