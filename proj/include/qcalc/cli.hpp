// Command-line front end: qcalc <eval|verify|figure|similarity> [flags].
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage, configuration or domain error.

#ifndef QCALC_CLI_HPP_
#define QCALC_CLI_HPP_

#include <ostream>
#include <string>

namespace qcalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// CSV (x,u; 2001 rows over [-50, 50]) for fig1..fig6 at q = 10, nu = 1.
// Figures 4-6 follow the captions; the surrounding prose calls them 7-9.
std::string figure_csv(const std::string& id, unsigned bits);
std::string figure_caption(const std::string& id);

}  // namespace qcalc

#endif  // QCALC_CLI_HPP_
