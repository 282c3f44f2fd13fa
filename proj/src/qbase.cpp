#include "qcalc/qbase.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

QBase QBase::classical() {
  QBase q;
  q.classical_ = true;
  return q;
}

QBase QBase::exact(const BigRational& q) {
  if (q == 1) return classical();
  if (q < 1) throw DomainError("q must be > 1 (got " + q.get_str() + ")");
  QBase b;
  b.exact_ = q;
  return b;
}

QBase QBase::real(const Real& q) {
  if (!(q > 1)) throw DomainError("q must be > 1 (got " + q.to_string(20) + ")");
  QBase b;
  b.real_ = q;
  return b;
}

QBase QBase::parse(std::string_view text) { return exact(parse_rational(text)); }

BigRational QBase::exact_value() const {
  if (classical_) return BigRational(1);
  if (!exact_) throw DomainError("exact operation requires a rational q");
  return *exact_;
}

Real QBase::value(unsigned bits) const {
  if (classical_) return Real(1L, bits);
  if (exact_) return Real(*exact_, bits);
  return real_->rounded(bits);
}

std::string QBase::to_string() const {
  if (classical_) return "1";
  if (exact_) return exact_->get_str();
  return real_->to_string(30);
}

}  // namespace qcalc
