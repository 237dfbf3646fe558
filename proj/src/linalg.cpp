#include "starconf/linalg.hpp"

namespace starconf::detail {

std::pair<std::vector<std::vector<mpz_class>>, mpz_class> integer_rows(const DenseMatrix<RationalField>& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class total(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    total *= l;
  }
  return {std::move(out), total};
}

std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, mpz_class* det_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  mpz_class prev(1);
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out != nullptr && r == rows && rows == cols) *det_out = sign * prev;
  return r;
}

}  // namespace starconf::detail
