#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcalc/errors.hpp"
#include "qcalc/qburgers.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qschrodinger.hpp"

using namespace qcalc;

namespace {
constexpr unsigned kBits = 256;
Real R(const char* s) { return Real::parse(s, kBits); }
BigRational r(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("parameters") {
  CHECK_THROWS_AS((QuantumParams{r(0), r(1)}.validate()), DomainError);
  CHECK_THROWS_AS((QuantumParams{r(1), r(-1)}.validate()), DomainError);
  CHECK((QuantumParams{r(1), r(1)}.nu_exact() == GaussianRational(r(0), r(1, 2))));
  CHECK((QuantumParams{r(3), r(2)}.nu_exact() == GaussianRational(r(0), r(3, 4))));
}

TEST_CASE("complex KdF polynomials") {
  const QuantumParams p;  // hbar = m = 1, q = 2
  // H_2 = x^2 + (i t / 2) [2]
  const auto h2 = kdf_complex(2, p);
  REQUIRE(h2);
  CHECK(h2->coeff(2, 0) == GaussianRational(1L));
  CHECK(h2->coeff(0, 1) == GaussianRational(r(0), r(3, 2)));
  for (unsigned n = 0; n <= 10; ++n) CHECK(schrodinger_residual_poly(*kdf_complex(n, p), p).is_zero());

  // printed denominator: undefined for even N, not a solution at N = 3
  CHECK_FALSE(kdf_complex(2, p, SchrodingerKdfReading::kAsPrinted));
  const auto printed3 = kdf_complex(3, p, SchrodingerKdfReading::kAsPrinted);
  REQUIRE(printed3);
  CHECK_FALSE(schrodinger_residual_poly(*printed3, p).is_zero());
}

TEST_CASE("generating coefficients") {
  const QuantumParams p{r(1, 2), r(3), QBase::exact(3, 2)};
  const auto gen = schrodinger_generating_coefficients(6, p);
  // p^N coefficient = (i/hbar)^N H_N / [N]!
  for (unsigned n = 0; n <= 6; ++n) {
    const GaussianRational scale =
        pow(GaussianRational::i() / GaussianRational(p.hbar), n) / GaussianRational(q_factorial(n, p.q));
    CHECK(*kdf_complex(n, p) * scale == gen[n]);
  }
}

TEST_CASE("plane waves give u = p/m") {
  const QuantumParams params{r(1), r(2), QBase::exact(10)};
  for (const char* ps : {"1", "-1", "2.5"}) {
    const auto u = complex_cole_hopf(schrodinger_plane_wave(R(ps), params), params);
    const Complex v = u(R("0.4"), R("1.2"));
    CHECK(abs(v - Complex(R(ps) / 2L)) < R("1e-70"));
  }
  // psi carrying the wrong nu
  const auto wrong = HeatSolution<Complex>::plane_wave(Complex(R("1")), QBase::exact(10), Complex(R("1")));
  CHECK_THROWS_AS(complex_cole_hopf(wrong, params), DomainError);
}

TEST_CASE("Madelung residual and the two-fluid split") {
  const QuantumParams params;
  CHECK(madelung_canonical_variant() == canonical_variant());
  const Real one(1L, kBits);
  const auto psi = schrodinger_superposition(Complex::zero(kBits), {{Complex(one), one}, {Complex(one), -one}}, params);
  const auto u = complex_cole_hopf(psi, params);
  const Grid grid = make_grid({R("0.3"), R("1.1")}, {R("0.2"), R("0.7")});
  CHECK(madelung_residual(u, grid, params, kBits).max_abs < R("1e-60"));
  const BurgersVariant other{BurgersVariant::Grouping::kOpOnProduct, BurgersVariant::TimeArg::kPlainTime};
  CHECK(madelung_residual(u, grid, params, kBits, other).max_abs > R("1e-6"));

  const TwoFluidCheck split = two_fluid_split_check(u, grid, params, kBits);
  CHECK(split.max_discrepancy < R("1e-18"));
  CHECK(split.real_equation.max_abs < R("1e-60"));
}

TEST_CASE("classical Madelung limit scales like eps") {
  const Grid grid = make_grid({R("0.3"), R("0.9")}, {R("0.2")});
  std::vector<MadelungLimitReport> rep;
  for (const char* eps : {"1/10000", "1/100000"}) {
    const QuantumParams p{r(1), r(1), QBase::exact(1 + parse_rational(eps))};
    rep.push_back(classical_madelung_limit(two_wave_test_state(p, kBits), p, grid, kBits));
  }
  const Real slope = log10(rep[0].hamilton_jacobi / rep[1].hamilton_jacobi);
  CHECK(abs(slope - 1L) < R("0.1"));
  CHECK(rep[1].continuity_reduced < R("1e-4"));
}
