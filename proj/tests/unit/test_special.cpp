#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qspecial.hpp"

using namespace qcalc;

namespace {
constexpr unsigned kBits = 256;
Real tiny(const char* s = "1e-70") { return Real::parse(s, kBits); }

// sum_{n < terms} x^n / [n]_q!, exactly.
BigRational eq_partial(const BigRational& x, const QBase& q, unsigned terms) {
  BigRational acc(0), xn(1);
  for (unsigned n = 0; n < terms; ++n) {
    acc += xn / q_factorial(n, q);
    xn *= x;
  }
  return acc;
}
}  // namespace

TEST_CASE("e_q at zero and against an exact partial sum") {
  const QBase q = QBase::exact(2);
  CHECK(e_q(Real::zero(kBits), q).value == Real(1L, kBits));
  // [n]_2! grows like 2^(n^2/2): 60 terms are far past 256 bits.
  const Real ref(eq_partial(BigRational(1), q, 60), kBits);
  const auto e = e_q(Real(1L, kBits), q);
  CHECK(abs(e.value - ref) < tiny());
  CHECK(e.terms_used > 3);
  CHECK(e.cancellation_digits == 0);

  const Real ref_neg(eq_partial(make_rational(-7, 2), q, 60), kBits);
  CHECK(abs(e_q(Real::parse("-3.5", kBits), q).value - ref_neg) < tiny());
}

TEST_CASE("e_q classical limit is exp") {
  const Real x = Real::parse("0.7", kBits);
  CHECK(abs(e_q(x, QBase::classical()).value - exp(x)) < tiny());
}

TEST_CASE("zeros of e_q sit at -q^(n+1)/(q-1)") {
  const QBase q = QBase::exact(2);
  CHECK(eq_zero_closed_form(q, 0, kBits) == Real(-2L, kBits));
  CHECK(eq_zero_closed_form(QBase::exact(10), 0, kBits) == Real::parse("-10/9", kBits));
  const auto zeros = zeros_of_eq(q, 3, kBits);
  REQUIRE(zeros.size() == 4);
  const long expected[] = {-2, -4, -8, -16};
  for (int i = 0; i < 4; ++i) CHECK(abs(zeros[i] - expected[i]) < tiny("1e-60"));
  // Exact zero: the relative criterion cannot be met, the absolute series is ~0.
  CHECK(abs(e_q_absolute(Real(-2L, kBits), q)) < tiny());
  CHECK_THROWS_AS(e_q(Real(-2L, kBits), q), PrecisionExhausted);
  CHECK_THROWS_AS(zeros_of_eq(QBase::classical(), 3, kBits), DomainError);
}

TEST_CASE("even and odd parts") {
  const QBase q = QBase::exact(3, 2);
  const Real x = Real::parse("1.3", kBits);
  const auto parts = e_q_parts(x, q);
  CHECK(abs(parts.even.value + parts.odd.value - e_q(x, q).value) < tiny());
  CHECK(abs(sinh_q(-x, q) + sinh_q(x, q)) < tiny());
  CHECK(abs(cosh_q(-x, q) - cosh_q(x, q)) < tiny());
  CHECK(abs(tanh_q(x, q) - sinh_q(x, q) / cosh_q(x, q)) < tiny());
  // D_x cosh_q = sinh_q
  const ScalarFn<Real> c = [&](const Real& y) { return cosh_q(y, q); };
  CHECK(abs(q_derivative_fn(c, x, q).value - sinh_q(x, q)) < tiny("1e-60"));
}

TEST_CASE("complex argument: e_q(i y) = cosh_q(i y) + sinh_q(i y)") {
  const QBase q = QBase::exact(2);
  const Complex z(Real::zero(kBits), Real::parse("0.8", kBits));
  const Complex sum = cosh_q(z, q) + sinh_q(z, q);
  CHECK(abs(e_q(z, q).value - sum) < tiny());
}

TEST_CASE("ln_q series") {
  const QBase q = QBase::exact(2);
  BigRational acc(0), zn(1);
  const BigRational z = make_rational(1, 2);
  for (unsigned n = 1; n < 300; ++n) {
    zn *= z;
    acc += (n % 2 ? 1 : -1) * zn / q_number(n, q);
  }
  CHECK(abs(ln_q(Real(z, kBits), q).value - Real(acc, kBits)) < tiny());
  CHECK(abs(ln_q(Real::parse("0.5", kBits), QBase::classical()).value - log(Real::parse("1.5", kBits))) < tiny());
  CHECK_THROWS_AS(ln_q(Real(2L, kBits), q), DomainError);
}
