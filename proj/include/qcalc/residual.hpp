// Grids, residual reports and the classical time derivative shared by the
// PDE modules.

#ifndef QCALC_RESIDUAL_HPP_
#define QCALC_RESIDUAL_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/errors.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

struct GridPoint {
  Real x;
  Real t;
};
using Grid = std::vector<GridPoint>;

// Cartesian product xs × ts.
Grid make_grid(const std::vector<Real>& xs, const std::vector<Real>& ts);
// n points from lo to hi inclusive (n >= 2), at `bits` precision.
std::vector<Real> linspace(const Real& lo, const Real& hi, unsigned n, unsigned bits);

// Which printed grouping of the derivative terms and which time argument in
// the cubic term of the q-Burgers equation. See qburgers.hpp.
struct BurgersVariant {
  enum class Grouping { kOpOnProduct, kUTimesOpOnDu };
  enum class TimeArg { kPlainTime, kDilatedTime };
  Grouping grouping = Grouping::kUTimesOpOnDu;
  TimeArg time_arg = TimeArg::kPlainTime;

  friend bool operator==(const BurgersVariant&, const BurgersVariant&) = default;
  std::string to_string() const;
};

template <class T>
struct ResidualReport {
  Grid grid;
  std::vector<T> residuals;
  Real max_abs;
  Real mean_abs;
  std::optional<BurgersVariant> variant;
};

template <class T>
ResidualReport<T> make_report(Grid grid, std::vector<T> residuals,
                              std::optional<BurgersVariant> variant = std::nullopt) {
  unsigned bits = kMinPrecisionBits;
  for (const auto& r : residuals) bits = std::max(bits, precision_of(r));
  Real max_abs = Real::zero(bits);
  Real sum = Real::zero(bits);
  for (const auto& r : residuals) {
    const Real a = abs(r);
    sum += a;
    if (a > max_abs) max_abs = a;
  }
  Real mean = residuals.empty() ? sum : sum / static_cast<long>(residuals.size());
  return {std::move(grid), std::move(residuals), std::move(max_abs), std::move(mean), variant};
}

// A field evaluated at a real point (x, t).
template <class T>
using Field = std::function<T(const Real& x, const Real& t)>;

// d/dt g at t: five-point central differences with step h and h/2 combined
// by one Richardson step, h = 2^(-bits/8).
template <class T>
T time_derivative_fd(const std::function<T(const Real&)>& g, const Real& t, unsigned bits) {
  const Real h = ldexp(Real(1L, bits), -static_cast<long>(bits / 8));
  const Real tt = t.rounded(std::max(bits, t.precision()));
  auto five_point = [&](const Real& step) {
    const T num = g(tt - ldexp(step, 1)) - g(tt + ldexp(step, 1)) + (g(tt + step) - g(tt - step)) * 8L;
    return num / T(step * 12L);
  };
  const T coarse = five_point(h);
  const T fine = five_point(ldexp(h, -1));
  return (fine * 16L - coarse) / 15L;
}

// d^2/dy^2 g at y, same scheme: five-point second differences with one
// Richardson step.
template <class T>
T second_derivative_fd(const std::function<T(const Real&)>& g, const Real& y, unsigned bits) {
  const Real h = ldexp(Real(1L, bits), -static_cast<long>(bits / 8));
  const Real yy = y.rounded(std::max(bits, y.precision()));
  const T g0 = g(yy);
  auto five_point = [&](const Real& step) {
    const T num = (g(yy + step) + g(yy - step)) * 16L - g(yy + ldexp(step, 1)) - g(yy - ldexp(step, 1)) -
                  g0 * 30L;
    return num / T(step * step * 12L);
  };
  const T coarse = five_point(h);
  const T fine = five_point(ldexp(h, -1));
  return (fine * 16L - coarse) / 15L;
}

}  // namespace qcalc

#endif  // QCALC_RESIDUAL_HPP_
