#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"

using namespace qcalc;

namespace {
BigRational r(long n, long d = 1) { return make_rational(n, d); }
QPoly poly(std::vector<BigRational> c) { return QPoly(std::move(c)); }
}  // namespace

TEST_CASE("q-numbers and q-factorials by hand") {
  const QBase q32 = QBase::exact(3, 2);
  CHECK(q_number(0, q32) == 0);
  CHECK(q_number(1, q32) == 1);
  CHECK(q_number(3, q32) == r(19, 4));  // 1 + 3/2 + 9/4
  CHECK(q_factorial(0, QBase::exact(2)) == 1);
  CHECK(q_factorial(3, QBase::exact(2)) == 21);  // 1 * 3 * 7
  CHECK(q_factorial(4, QBase::exact(10)) == 1 * 11 * 111 * 1111);
}

TEST_CASE("classical sentinel reduces to integers") {
  const QBase one = QBase::classical();
  CHECK(one.classical_limit());
  for (unsigned n = 0; n < 8; ++n) CHECK(q_number(n, one) == n);
  CHECK(q_factorial(5, one) == 120);
  CHECK(QBase::parse("1").classical_limit());
}

TEST_CASE("real q-numbers agree with the exact ones") {
  const QBase q = QBase::exact(3, 2);
  const Real exact(q_factorial(6, q), 256);
  CHECK(abs(q_factorial(6, q, 256) - exact) < Real::parse("1e-70", 256));
}

TEST_CASE("q base parsing and validation") {
  CHECK(QBase::parse("3/2").exact_value() == r(3, 2));
  CHECK(QBase::parse("1.5").exact_value() == r(3, 2));
  CHECK_THROWS_AS(QBase::parse("1/2"), DomainError);
  CHECK_THROWS_AS(QBase::parse("-3"), DomainError);
  CHECK_THROWS_AS(QBase::parse("two"), std::invalid_argument);
  CHECK_THROWS_AS(QBase::real(Real::parse("0.9")), DomainError);
  CHECK_THROWS_AS(QBase::real(Real::parse("2.5")).exact_value(), DomainError);
}

TEST_CASE("Jackson derivative of polynomials") {
  const QBase q = QBase::exact(3, 2);
  // D(x^3 + x) = [3] x^2 + 1
  CHECK(q_derivative_poly(poly({0, 1, 0, 1}), q) == poly({1, 0, r(19, 4)}));
  CHECK(q_derivative_poly(poly({7}), q).is_zero());
  // D^2 x^4 = [4][3] x^2 at q = 2
  CHECK(q_derivative_poly(QPoly::monomial(BigRational(1), 4), QBase::exact(2), 2) ==
        QPoly::monomial(BigRational(15 * 7), 2));
  // classical: the ordinary derivative
  CHECK(q_derivative_poly(poly({1, 2, 3}), QBase::classical()) == poly({2, 6}));
}

TEST_CASE("dilation") {
  CHECK(dilate_poly(poly({1, 1, 1}), QBase::exact(2)) == poly({1, 2, 4}));
}

TEST_CASE("difference quotient on functions") {
  const QBase q = QBase::exact(2);
  const ScalarFn<Real> sq = [](const Real& x) { return x * x; };
  const auto d = q_derivative_fn(sq, Real(3L, 128), q);
  CHECK(abs(d.value - 9L) < Real::parse("1e-30", 128));  // [2] x = 9
  CHECK_FALSE(d.precision_loss);
  CHECK_THROWS_AS(q_derivative_fn(sq, Real(0L, 128), q), DomainError);
  CHECK_THROWS_AS(q_derivative_fn(sq, Real(1L, 128), QBase::classical()), DomainError);
}

TEST_CASE("e^(a D^2) on polynomials") {
  const QBase q = QBase::exact(2);
  // x^2 + a [2]
  CHECK(exp_q_laplacian(QPoly::monomial(BigRational(1), 2), r(1, 2), q) == poly({r(3, 2), 0, 1}));
  // x^4 + a [4][3] x^2 + a^2/2 [4][3][2][1]
  CHECK(exp_q_laplacian(QPoly::monomial(BigRational(1), 4), BigRational(1), q) == poly({r(315, 2), 0, 105, 0, 1}));
  // symbolic form evaluated at s = a
  const BiQPoly sym = exp_q_laplacian_symbolic(QPoly::monomial(BigRational(1), 5), q);
  CHECK(sym.at_s(r(-2, 3)) == exp_q_laplacian(QPoly::monomial(BigRational(1), 5), r(-2, 3), q));
}

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-6/4") == r(-3, 2));
  CHECK(parse_rational("0.25") == r(1, 4));
  CHECK(parse_rational("1e-3") == r(1, 1000));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  const GaussianRational z(r(1, 2), r(-3));
  CHECK(z * GaussianRational::i() == GaussianRational(r(3), r(1, 2)));
  CHECK(pow(GaussianRational::i(), 2) == GaussianRational(-1L));
}

TEST_CASE("reals") {
  const Real third = Real::parse("1/3", 200);
  CHECK(abs(third * 3L - 1L) < Real::parse("1e-59", 200));
  CHECK(Real::parse("2.5", 64).to_string(5) == "2.5");
  CHECK_THROWS_AS(Real::parse("abc"), std::invalid_argument);
  CHECK(decimal_digits(256) == 77);
}
