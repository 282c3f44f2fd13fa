#ifndef QCALC_ERRORS_HPP_
#define QCALC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace qcalc {

class QError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical domain was violated (x = 0 for a
// dilation quotient, q < 1, |z| >= q for ln_q, ...).
class DomainError : public QError {
 public:
  using QError::QError;
};

// Cancellation consumed the working precision even after the permitted
// precision increases.
class PrecisionExhausted : public QError {
 public:
  using QError::QError;
};

// Evaluation hit a zero of a denominator. `lo`/`hi` bracket the suspected
// pole along the axis being evaluated (lo == hi for a point hit).
class PoleError : public QError {
 public:
  PoleError(const std::string& what, std::string lo, std::string hi)
      : QError(what), lo_(std::move(lo)), hi_(std::move(hi)) {}
  const std::string& lo() const { return lo_; }
  const std::string& hi() const { return hi_; }

 private:
  std::string lo_;
  std::string hi_;
};

// A residual grid contains a point where the operator is undefined.
class GridError : public QError {
 public:
  using QError::QError;
};

// A bivariate polynomial was evaluated without its second argument.
class ArityError : public QError {
 public:
  using QError::QError;
};

// Equation-variant calibration did not single out exactly one variant.
class CalibrationError : public QError {
 public:
  using QError::QError;
};

}  // namespace qcalc

#endif  // QCALC_ERRORS_HPP_
