#include "qcalc/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace qcalc {
namespace {

mpfr_prec_t clamp_bits(unsigned bits) {
  return static_cast<mpfr_prec_t>(std::max(bits, kMinPrecisionBits));
}

unsigned max_bits(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real Real::zero(unsigned bits) { return Real(0L, bits); }

Real::Real(long value, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, unsigned bits) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class ratio;
    if (ratio.set_str(s, 10) != 0) throw std::invalid_argument("malformed ratio: " + s);
    if (ratio.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    ratio.canonicalize();
    return Real(ratio, bits);
  }
  Real r = Real::zero(bits);
  char* end = nullptr;
  if (mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("malformed number: " + s);
  }
  if (!r.is_finite()) throw std::invalid_argument("non-finite number: " + s);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` valid (it still owns a limb array) by swapping with a
  // fresh minimal-precision value.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(unsigned bits) const {
  Real r = Real::zero(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r = Real::zero(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = decimal_digits(precision());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define QCALC_REAL_BINOP(op, fn)                                    \
  Real operator op(const Real& a, const Real& b) {                  \
    Real r = Real::zero(max_bits(a, b));                            \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                       \
    return r;                                                       \
  }
QCALC_REAL_BINOP(+, mpfr_add)
QCALC_REAL_BINOP(-, mpfr_sub)
QCALC_REAL_BINOP(*, mpfr_mul)
QCALC_REAL_BINOP(/, mpfr_div)
#undef QCALC_REAL_BINOP

Real operator+(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }

#define QCALC_REAL_UNARY(name, fn)               \
  Real name(const Real& x) {                     \
    Real r = Real::zero(x.precision());          \
    fn(r.get(), x.get(), MPFR_RNDN);             \
    return r;                                    \
  }
QCALC_REAL_UNARY(abs, mpfr_abs)
QCALC_REAL_UNARY(sqrt, mpfr_sqrt)
QCALC_REAL_UNARY(exp, mpfr_exp)
QCALC_REAL_UNARY(log, mpfr_log)
QCALC_REAL_UNARY(log10, mpfr_log10)
QCALC_REAL_UNARY(log1p, mpfr_log1p)
QCALC_REAL_UNARY(sin, mpfr_sin)
QCALC_REAL_UNARY(cos, mpfr_cos)
QCALC_REAL_UNARY(tanh, mpfr_tanh)
#undef QCALC_REAL_UNARY

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(max_bits(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::zero(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

unsigned Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re_.to_string(digits) + im + "i";
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a) += b; }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a) -= b; }
Complex operator*(const Complex& a, const Complex& b) { return Complex(a) *= b; }
Complex operator/(const Complex& a, const Complex& b) { return Complex(a) /= b; }
Complex operator*(const Complex& a, long b) { return {a.real() * b, a.imag() * b}; }
Complex operator/(const Complex& a, long b) { return {a.real() / b, a.imag() / b}; }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator-(long a, const Complex& b) { return {a - b.real(), -b.imag()}; }
Complex operator+(const Complex& a, long b) { return {a.real() + b, a.imag()}; }
Complex operator-(const Complex& a, long b) { return {a.real() - b, a.imag()}; }
bool operator==(const Complex& a, const Complex& b) {
  return a.real() == b.real() && a.imag() == b.imag();
}

Real abs(const Complex& z) {
  Real r = Real::zero(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Complex exp(const Complex& z) {
  Real mag = exp(z.real());
  Real s = Real::zero(z.precision());
  Real c = Real::zero(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return {mag * c, mag * s};
}

Complex sqrt(const Complex& z) {
  // Principal branch.
  Real r = abs(z);
  Real re = sqrt((r + z.real()) / 2L);
  Real im = sqrt((r - z.real()) / 2L);
  if (z.imag().sign() < 0) im = -im;
  return {re, im};
}

Complex ldexp(const Complex& z, long e) { return {ldexp(z.real(), e), ldexp(z.imag(), e)}; }

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.to_string(); }

int decimal_digits(unsigned bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
}

}  // namespace qcalc
