#pragma once

// Exhaustive property suites over every family up to a size bound. Each
// property runs its per-object checks through the kernels in kernels.hpp.

#include <cstddef>
#include <string>
#include <vector>

#include "springer/kernels.hpp"

namespace springer {

struct PropertyResult {
  std::string name;
  std::string range;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string detail;
  double seconds = 0.0;
};

/// Names of every property, sorted.
std::vector<std::string> property_names();

/// Runs every property for n = 0..n_max (a few cheap oracle comparisons
/// extend to n = 12). Results are ordered by name.
std::vector<PropertyResult> verify_all(std::size_t n_max, kernels::Execution exec);

/// Runs one property; throws std::out_of_range for an unknown name.
PropertyResult verify_one(const std::string& name, std::size_t n_max,
                          kernels::Execution exec);

}  // namespace springer
