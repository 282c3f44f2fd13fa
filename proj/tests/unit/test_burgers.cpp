#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qburgers.hpp"
#include "qcalc/qhermite.hpp"
#include "qcalc/qspecial.hpp"

using namespace qcalc;

namespace {
constexpr unsigned kBits = 256;
Real R(const char* s) { return Real::parse(s, kBits); }
const QBase kQ10 = QBase::exact(10);
const Real kOne(1L, kBits);
}  // namespace

TEST_CASE("Cole-Hopf of a plane wave is the constant -2 nu k") {
  const auto u = cole_hopf(HeatSolution<Real>::plane_wave(R("1.5"), QBase::exact(2), R("0.5")));
  CHECK(abs(u(R("0.8"), R("0.1")) + R("1.5")) < R("1e-70"));
  CHECK(abs(u(R("0"), R("3")) + R("1.5")) < R("1e-70"));
}

TEST_CASE("static shock is -2 nu tanh_q") {
  const auto u = shock_single(kOne, -kOne, kQ10, kOne);
  for (const char* x : {"0.3", "-2", "40"}) {
    CHECK(abs(u(R(x), R("5")) + tanh_q(R(x), kQ10) * 2L) < R("1e-70"));
  }
  CHECK(u(R("0"), R("1")).is_zero());
}

TEST_CASE("canonical reading and residuals") {
  const BurgersVariant v = canonical_variant();
  CHECK(v.grouping == BurgersVariant::Grouping::kUTimesOpOnDu);
  CHECK(v.time_arg == BurgersVariant::TimeArg::kPlainTime);
  CHECK(v.to_string() == "u-times-op-on-du/plain-time");

  const Grid grid = make_grid({R("0.6"), R("1.3")}, {R("0.4"), R("-0.8")});
  const auto offset = shock_offset(R("10"), kOne, -kOne, kQ10, kOne);
  CHECK(burgers_residual(offset, grid, kQ10, kOne, kBits).max_abs < R("1e-60"));

  // Every other reading leaves a visible residual on the time-dependent
  // offset shock (the static tanh_q shock cannot tell t from qt).
  const auto offset_shock = shock_offset(R("10"), kOne, -kOne, QBase::exact(2), kOne);
  for (auto g : {BurgersVariant::Grouping::kOpOnProduct, BurgersVariant::Grouping::kUTimesOpOnDu}) {
    for (auto t : {BurgersVariant::TimeArg::kPlainTime, BurgersVariant::TimeArg::kDilatedTime}) {
      const BurgersVariant other{g, t};
      const Real res = burgers_residual(offset_shock, grid, QBase::exact(2), kOne, kBits, other).max_abs;
      if (other == v) {
        CHECK(res < R("1e-60"));
      } else {
        CHECK(res > R("1e-6"));
      }
    }
  }
}

TEST_CASE("calibration finds one reading") {
  const auto cal = variant_calibrate_table(QBase::exact(3, 2), R("0.5"), kBits);
  int passing = 0;
  for (const auto& row : cal.table) passing += row.pass;
  CHECK(passing == 1);
  CHECK(cal.variant == canonical_variant());
  CHECK(cal.fields.size() == 5);
}

TEST_CASE("polynomial Cole-Hopf image") {
  const auto u = cole_hopf(HeatSolution<Real>::polynomial(kdf_explicit(2, QBase::exact(2)), QBase::exact(2), kOne));
  // u = -2 [2] x / (x^2 + [2] t) at q = 2, nu = 1
  CHECK(abs(u(R("1"), R("1")) + R("1.5")) < R("1e-70"));
  const Grid grid = make_grid({R("0.5"), R("2")}, {R("0.3")});
  CHECK(burgers_residual(u, grid, QBase::exact(2), kOne, kBits).max_abs < R("1e-60"));
}

TEST_CASE("four-wave shock") {
  const auto spec = four_wave_spec(kQ10, kOne);
  CHECK(spec.paired_regular());
  const auto u = shock_multi(spec);
  for (const char* x : {"-7.5", "0.2", "33"}) {
    for (const char* t : {"-3", "0", "2"}) {
      CHECK(abs(u(R(x), R(t)) - four_wave_closed_form(R(x), R(t), kQ10, kOne)) < R("1e-70"));
    }
  }
}

TEST_CASE("poles") {
  // A single wave has a removable 0/0 at the zeros of e_q: u = -2 nu k.
  const auto u = cole_hopf(HeatSolution<Real>::superposition(Real::zero(kBits), {{kOne, kOne}}, QBase::exact(2), kOne));
  CHECK(abs(u(R("-2"), R("0")) + 2L) < R("1e-60"));
  // -1 + e^t e_q(x) vanishes at the origin while D_x phi = 1 there.
  const auto v = cole_hopf(HeatSolution<Real>::superposition(-kOne, {{kOne, kOne}}, QBase::exact(2), kOne));
  CHECK_THROWS_AS(v(R("0"), R("0")), PoleError);
  CHECK_NOTHROW(v(R("0"), R("0.5")));
  CHECK_THROWS_AS(shock_offset(R("-1"), kOne, -kOne, kQ10, kOne), DomainError);
}

TEST_CASE("regularity scan") {
  const ScanAxes axes{R("-100"), R("100"), R("0.001"), 100, R("-20"), R("20"), 5, kBits};
  CHECK(regularity_scan(ShockSpec<Real>{R("10"), {{kOne, kOne}, {kOne, -kOne}}, kQ10, kOne}, axes).empty());
  CHECK(regularity_scan(four_wave_spec(kQ10, kOne), axes).empty());
  // unpaired waves do vanish
  const auto brackets = regularity_scan(ShockSpec<Real>{Real::zero(kBits), {{kOne, kOne}, {kOne, R("-0.5")}}, kQ10, kOne}, axes);
  CHECK_FALSE(brackets.empty());
  // single wave over [-1000, -1]: zeros near -10/9, -100/9, -1000/9
  const ScanAxes neg{R("-1000"), R("-1"), R("1"), 400, R("0"), R("1"), 2, kBits};
  const auto z = regularity_scan(ShockSpec<Real>{Real::zero(kBits), {{kOne, kOne}}, kQ10, kOne}, neg);
  CHECK(z.size() == 6);  // 3 per time slice
  for (const auto& b : z) CHECK(b.x_lo < b.x_hi);
}

TEST_CASE("self-similarity metric") {
  const auto u = shock_single(kOne, -kOne, kQ10, kOne);
  const Real m = self_similarity_metric(u, kQ10, R("0"), R("5"), R("50"), 2);
  CHECK(m > R("0.99"));
  CHECK(m <= kOne);
  const VelocityField<Real> zero = [](const Real&, const Real&) { return Real::zero(kBits); };
  CHECK(self_similarity_metric(zero, kQ10, R("0"), R("1"), R("2"), 1) == kOne);
  CHECK_THROWS_AS(self_similarity_metric(u, kQ10, R("0"), R("-1"), R("2"), 1), DomainError);
}

TEST_CASE("IVP initial profile") {
  const QBase q = QBase::exact(2);
  // f = x^2, F = -2 nu [2] x / x^2
  const QPoly f = QPoly::monomial(BigRational(1), 2);
  CHECK(ivp_initial_profile(f, QPoly::monomial(BigRational(-6), 1), f, BigRational(1), q).is_zero());
  CHECK_FALSE(ivp_initial_profile(f, QPoly::monomial(BigRational(-5), 1), f, BigRational(1), q).is_zero());
  const std::function<Real(const Real&)> ff = [](const Real& x) { return x * x; };
  const std::function<Real(const Real&)> big_f = [](const Real& x) { return Real(-6L, kBits) / x; };
  CHECK(ivp_initial_profile(ff, big_f, {R("0.5"), R("3")}, kOne, q).max_abs < R("1e-60"));
}

TEST_CASE("classical Burgers limit") {
  const QBase q = QBase::parse("1.000001");
  const auto u = cole_hopf(HeatSolution<Real>::superposition(Real::zero(kBits), {{kOne, kOne}, {kOne, R("2")}}, q, kOne));
  const Grid grid = make_grid({R("0.5"), R("1.5")}, {R("0.3")});
  CHECK(classical_burgers_residual(u, grid, kOne, kBits).max_abs < R("1e-4"));
}
