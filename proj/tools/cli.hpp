#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specgenus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConjectureViolation = 2;

/// Runs the command line. `args` excludes the program name. Returns the process exit code:
/// 0 on success, 1 on input or consistency errors, 2 when a germ violates the weak form.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specgenus::cli
