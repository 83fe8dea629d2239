#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copo {

/// Exit codes: 0 every checked verdict holds (or is not applicable),
/// 1 a checked property failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Poset
/// documents are read from the path given on the command line, or from
/// `in` when it is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace copo
