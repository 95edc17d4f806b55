/**
 * Command-line front end. Exit codes: 0 success, 1 failed or refused,
 * 2 undecided or no certificate, 3 bad input, 4 grid too coarse.
 */
#ifndef ISYS_CLI_HPP
#define ISYS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace isys {

enum ExitCode { ExitOk = 0, ExitFailed = 1, ExitUndecided = 2, ExitInput = 3, ExitRefine = 4 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isys

#endif
