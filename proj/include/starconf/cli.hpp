#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

/// Settings shared by every subcommand.
struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 3;
  int jobs = 1;
  FieldKind field_kind = FieldKind::PrimeField;
  std::optional<std::string> output_path;

  FieldConfig field() const { return {field_kind, prime}; }
};

/// Default prime, overridden by the STAR_PRIME environment variable when set.
std::uint64_t default_prime_from_env();

/// Per-tuple seed for table runs; independent of scheduling order.
std::uint64_t derive_seed(std::uint64_t base, int n, int l, int r, int d);

/// Entry point behind the `starconf` binary. `args` excludes the program name.
/// Exit codes: 0 success, 1 negative outcome (Inconclusive, not decomposable,
/// failed checks), 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starconf
