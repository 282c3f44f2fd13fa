// The deformation parameter q.

#ifndef QCALC_QBASE_HPP_
#define QCALC_QBASE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"

namespace qcalc {

// q > 1, either exact rational or high-precision real, or the exact
// classical sentinel q = 1. Polynomial identities need an exact q; field
// evaluation accepts either.
class QBase {
 public:
  static QBase classical();
  // q == 1 yields the classical sentinel; q < 1 throws DomainError.
  static QBase exact(const BigRational& q);
  static QBase exact(long num, long den = 1) { return exact(make_rational(num, den)); }
  // Irrational q for field evaluation only; q must exceed 1.
  static QBase real(const Real& q);
  // "1" -> classical; "3/2", "10", "1.000001" -> exact.
  static QBase parse(std::string_view text);

  bool classical_limit() const { return classical_; }
  bool is_exact() const { return classical_ || exact_.has_value(); }
  // Throws DomainError when q is not rational.
  BigRational exact_value() const;
  Real value(unsigned bits) const;
  std::string to_string() const;

 private:
  QBase() = default;
  bool classical_ = false;
  std::optional<BigRational> exact_;
  std::optional<Real> real_;
};

}  // namespace qcalc

#endif  // QCALC_QBASE_HPP_
