#pragma once

#include <cstdint>
#include <iosfwd>

namespace radokit::cli {

struct SelftestOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// Runs every invariant suite and prints one key=value line per suite plus a
// final summary. Output depends only on the seed. Returns true when every
// suite passes.
bool run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace radokit::cli
