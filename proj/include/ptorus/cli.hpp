#ifndef PTORUS_CLI_HPP
#define PTORUS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ptorus::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kFailure = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ptorus::cli

#endif  // PTORUS_CLI_HPP
