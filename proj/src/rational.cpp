#include "qcalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qcalc {

BigRational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational pow(const BigRational& base, unsigned n) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() { throw std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) fail();
  if (s.find('/') != std::string::npos) {
    BigRational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) fail();
    r.canonicalize();
    return r;
  }
  // [sign] digits [. digits] [(e|E) [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    any_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) fail();
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used == 0 || e > 100000 || e < -100000) fail();
    pos += used;
    scale += e;
  }
  if (pos != s.size()) fail();
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  BigRational r = scale < 0 ? BigRational(mantissa, ten_pow) : BigRational(mantissa * ten_pow);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& r) { return r.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  BigRational den = o.re_ * o.re_ + o.im_ * o.im_;
  BigRational re = (re_ * o.re_ + im_ * o.im_) / den;
  BigRational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a) += b;
}
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a) -= b;
}
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a) *= b;
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a) /= b;
}

GaussianRational pow(const GaussianRational& base, unsigned n) {
  GaussianRational r(1L);
  for (unsigned k = 0; k < n; ++k) r *= base;
  return r;
}

std::string to_string(const GaussianRational& z) {
  if (z.imag() == 0) return z.real().get_str();
  std::string im = z.imag().get_str();
  if (im.front() != '-') im.insert(im.begin(), '+');
  return z.real().get_str() + im + "i";
}

}  // namespace qcalc
