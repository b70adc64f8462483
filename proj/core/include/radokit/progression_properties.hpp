#pragma once

// Seeded randomized check of the basic fractional-dilate properties: symmetry,
// monotonicity in radius and progression, translation and dilation
// invariance, sub-additivity, composition, interiors, closures and shift
// invariance of averages. All comparisons are exact.

#include <cstdint>
#include <string>
#include <vector>

namespace radokit {

struct PropertyOutcome {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

struct ProgressionSuiteConfig {
  std::uint64_t seed = 1;
  std::int64_t instances = 1000;
  std::int64_t max_radius = 1000;
};

// One outcome per property, in the order listed above.
std::vector<PropertyOutcome> run_progression_suite(const ProgressionSuiteConfig& cfg);

}  // namespace radokit
