#ifndef PPRIME_CLI_HPP
#define PPRIME_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pprime::cli
{

enum ExitCode : int
{
  kPass = 0,
  kFail = 1,
  kUsage = 2,
  kConsistency = 3
};

// Runs one command line (args excludes the program name). The report goes
// to out, diagnostics to err. When PPRIME_REPORT_DIR is set the report is
// also written to <dir>/<command>.<format>.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pprime::cli

#endif  // PPRIME_CLI_HPP
