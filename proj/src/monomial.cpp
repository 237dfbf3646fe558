#include "starconf/monomial.hpp"

#include <numeric>
#include <stdexcept>

#include "starconf/combinatorics.hpp"

namespace starconf {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}

Monomial Monomial::one(int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  return Monomial(std::vector<unsigned>(static_cast<std::size_t>(nvars), 0U));
}

Monomial Monomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0U);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw std::invalid_argument("monomial variable count mismatch");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return ea.size() > eb.size();
}

namespace {

void enumerate(std::vector<unsigned>& cur, std::size_t pos, unsigned remaining, std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(cur, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int d) {
  if (nvars < 1) throw std::invalid_argument("monomial_basis: nvars must be >= 1");
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(basis_size(nvars, d));
  std::vector<unsigned> cur(static_cast<std::size_t>(nvars), 0U);
  enumerate(cur, 0, static_cast<unsigned>(d), out);
  return out;
}

std::size_t basis_size(int nvars, int d) {
  if (d < 0) return 0;
  return static_cast<std::size_t>(binomial(nvars - 1 + d, d));
}

std::size_t monomial_rank(const Monomial& m) {
  const int k = m.nvars();
  std::int64_t rem = m.degree();
  std::size_t idx = 0;
  for (int i = 0; i + 1 < k; ++i) {
    const std::int64_t e = m[i];
    // Monomials sharing the prefix but with a larger exponent at i come first.
    for (std::int64_t v = e + 1; v <= rem; ++v) {
      idx += static_cast<std::size_t>(binomial(k - i - 2 + rem - v, rem - v));
    }
    rem -= e;
  }
  return idx;
}

}  // namespace starconf
