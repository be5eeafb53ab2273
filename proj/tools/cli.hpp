#ifndef SUPERROOT_TOOLS_CLI_HPP
#define SUPERROOT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace superroot::cli {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when the library rejects
/// the input, 2 on a malformed command line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace superroot::cli

#endif
