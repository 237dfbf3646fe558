#include "starconf/star.hpp"

namespace starconf {

std::int64_t expected_hf(int n, int l, int t) {
  if (n < 1 || l < n || t < 0) throw std::invalid_argument("expected_hf: need 1 <= n <= l and t >= 0");
  return std::min(binomial(n + t, n), binomial(l, n));
}

std::optional<int> star_dimension(int n, int l, int r) {
  if (r < 1 || r > l) throw std::invalid_argument("star_dimension: need 0 < r <= l");
  const int codim = l - r + 1;
  if (codim > n) return std::nullopt;
  return n - codim;
}

}  // namespace starconf
