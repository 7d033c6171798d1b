#pragma once

// The whakit command line.  Exit codes: 0 when every requested check passes,
// 1 when a check fails, 2 on malformed input or usage.

#include <ostream>
#include <string>
#include <vector>

namespace whakit {

inline constexpr const char* kVersion = "0.1.0";

/// `args` excludes the program name.  The RunReport of every command except
/// `report` is saved to .whakit/last_report.json under the working directory.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whakit
