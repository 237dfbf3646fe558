#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starconf {

/// A sorted set of 0-based indices.
using Subset = std::vector<int>;

/// C(n, k); zero when k < 0 or k > n. Exact for every value used here (n <= 60).
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

/// {0..n-1} \ s, sorted.
Subset complement(const Subset& s, int n);

bool contains_index(const Subset& s, int i);

/// 1-based rendering used in serialized keys: {0,1,3} -> "1,2,4".
std::string subset_key(const Subset& s);
Subset subset_from_key(const std::string& key);

}  // namespace starconf
