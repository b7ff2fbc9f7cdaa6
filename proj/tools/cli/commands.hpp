#ifndef SPLICEQUOT_CLI_COMMANDS_HPP
#define SPLICEQUOT_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace splicequot::cli
{

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3 };

// Runs one command line (without the program name). Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace splicequot::cli

#endif
