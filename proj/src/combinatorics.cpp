#include "starconf/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starconf {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Subset complement(const Subset& s, int n) {
  Subset out;
  for (int i = 0; i < n; ++i) {
    if (!contains_index(s, i)) out.push_back(i);
  }
  return out;
}

bool contains_index(const Subset& s, int i) { return std::find(s.begin(), s.end(), i) != s.end(); }

std::string subset_key(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

Subset subset_from_key(const std::string& key) {
  Subset out;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() || v < 1) throw std::invalid_argument("bad subset key '" + key + "'");
    out.push_back(v - 1);
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("subset key must be strictly increasing: '" + key + "'");
  }
  return out;
}

}  // namespace starconf
