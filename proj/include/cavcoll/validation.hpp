#pragma once

// Self-check suite run by `cavcoll validate`: the cross-module invariants,
// evaluated on the parameters of a run configuration.

#include <optional>
#include <string>
#include <vector>

#include "cavcoll/config.hpp"

namespace cavcoll {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  // Replaces the computed normalization in the f-consistency check; lets a
  // harness confirm that a corrupted constant is caught.
  std::optional<double> g0_override;
};

std::vector<CheckResult> run_validation(const RunConfig& cfg, const ValidationOptions& opts = {});

}  // namespace cavcoll
