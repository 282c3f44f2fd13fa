// Pieces shared by the command implementations.

#ifndef QCALC_CLI_INTERNAL_HPP_
#define QCALC_CLI_INTERNAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcalc/qbase.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"

namespace qcalc::cli {

using Json = nlohmann::ordered_json;

// Parsed and validated flags common to every command.
struct RunConfig {
  std::string q_text = "2";
  std::string nu_text = "1";
  std::string hbar_text = "1";
  std::string mass_text = "1";
  std::string tolerance_text = "1e-15";
  std::string format = "json";
  unsigned bits = kDefaultPrecisionBits;
  std::uint64_t seed = 0;
  std::string out;

  // Filled by validate().
  QBase q = QBase::exact(2);
  BigRational nu{1};
  BigRational hbar{1};
  BigRational mass{1};
  Real tolerance;

  // Throws DomainError / std::invalid_argument on a bad value.
  void validate();
  Real nu_real() const { return Real(nu, bits); }
  Json to_json() const;
};

struct CheckResult {
  std::string check;
  std::string paper_ref;
  Json params = Json::object();
  std::optional<std::string> residual_max;
  std::optional<bool> exact;
  bool pass = false;
  std::optional<std::string> variant;
  std::optional<std::string> note;
};

Json to_json(const CheckResult& c);

// Writes through a temporary file in the same directory and renames it into
// place. Throws std::runtime_error when the path is not writable.
void write_atomically(const std::string& path, const std::string& content);

// i / 100 with exactly two decimals, e.g. -2.35, 0.00, 12.50.
std::string fixed2(long hundredths);

// Known suites: hermite-identities, kdf-identities, heat, burgers,
// schrodinger, all. `n_max` and `m` override the default orders.
bool is_suite(const std::string& name);
std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg, unsigned n_max, unsigned m);

}  // namespace qcalc::cli

#endif  // QCALC_CLI_INTERNAL_HPP_
