#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurbound/matrix.hpp"

namespace schurbound::cli {

struct SuiteOutcome {
  std::string name;
  int cases = 0;
  int passed = 0;
  int failed = 0;
  /// Most adverse residual seen (suite-specific; <= 0 is healthy for
  /// lower-bound margins, near 0 for identities).
  double worst = 0.0;
};

/// Seeded property suites over the library. Each suite draws from its own
/// generator derived from `seed`, so results do not depend on suite order.
std::vector<SuiteOutcome> run_selftest(std::uint64_t seed, const Settings& settings = {});

}  // namespace schurbound::cli
