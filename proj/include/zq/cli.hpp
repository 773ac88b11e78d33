#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zq {

/// Exit codes: 0 success, 1 domain error (including a false verdict),
/// 2 usage, I/O or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zq
