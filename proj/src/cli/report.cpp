#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cli_internal.hpp"
#include "qcalc/errors.hpp"

namespace qcalc::cli {

void RunConfig::validate() {
  if (bits < kMinPrecisionBits) {
    throw DomainError("--precision-bits must be >= " + std::to_string(kMinPrecisionBits));
  }
  if (format != "json" && format != "csv") throw DomainError("--format must be csv or json");
  q = QBase::parse(q_text);
  nu = parse_rational(nu_text);
  hbar = parse_rational(hbar_text);
  mass = parse_rational(mass_text);
  if (nu == 0) throw DomainError("--nu must be nonzero");
  if (hbar <= 0) throw DomainError("--hbar must be positive");
  if (mass <= 0) throw DomainError("--mass must be positive");
  tolerance = Real::parse(tolerance_text, bits);
  if (!(tolerance > 0)) throw DomainError("--tolerance must be positive");
}

Json RunConfig::to_json() const {
  return Json{{"q", q.to_string()},         {"nu", qcalc::to_string(nu)},     {"hbar", qcalc::to_string(hbar)},
              {"mass", qcalc::to_string(mass)}, {"precision_bits", bits}, {"tolerance", tolerance_text},
              {"seed", seed}};
}

Json to_json(const CheckResult& c) {
  Json j{{"check", c.check}, {"paper_ref", c.paper_ref}, {"params", c.params}};
  j["residual_max"] = c.residual_max ? Json(*c.residual_max) : Json(nullptr);
  j["exact"] = c.exact ? Json(*c.exact) : Json(nullptr);
  j["pass"] = c.pass;
  if (c.variant) j["variant"] = *c.variant;
  if (c.note) j["note"] = *c.note;
  return j;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path);
  }
}

std::string fixed2(long hundredths) {
  const bool neg = hundredths < 0;
  const long a = neg ? -hundredths : hundredths;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%ld.%02ld", neg ? "-" : "", a / 100, a % 100);
  return buf;
}

}  // namespace qcalc::cli
