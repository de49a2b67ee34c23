#ifndef FIXSPACE_CLI_HPP
#define FIXSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fixspace::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kParse = 3 };

// args[0] is the program name. Reports go to `out` unless --output is given;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixspace::cli

#endif  // FIXSPACE_CLI_HPP
