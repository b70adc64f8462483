#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radokit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
// Search gave only a lower bound, or a check came back negative.
inline constexpr int kExitInconclusive = 2;

// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radokit::cli
