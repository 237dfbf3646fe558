#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starconf {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick randomized runs of the library invariants (ring axioms, rank symmetry,
/// Hilbert functions of star points, certificate round trips, classifier consistency).
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

}  // namespace starconf
