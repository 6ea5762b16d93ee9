#ifndef IETK_CLI_HPP
#define IETK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ietk::cli {

/// Dispatch a command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 2 falsified preservation
/// verdict, 64 usage errors, 65 domain errors (reported as a JSON object).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ietk::cli

#endif
