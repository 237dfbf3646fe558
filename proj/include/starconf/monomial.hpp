#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace starconf {

/// Exponent vector of x_0^e0 * ... * x_{k-1}^e{k-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial one(int nvars);
  static Monomial variable(int nvars, int index);

  int nvars() const { return static_cast<int>(exps_.size()); }
  unsigned degree() const { return degree_; }
  unsigned operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const unsigned> exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded-lexicographic order with x0 > x1 > ... ; `a` sorts before `b` when a > b.
/// Iterating a container keyed with this comparator yields the monomial_basis order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Every monomial of total degree d in nvars variables, graded-lex descending.
std::vector<Monomial> monomial_basis(int nvars, int d);

/// Position of m inside monomial_basis(m.nvars(), m.degree()); computed directly.
std::size_t monomial_rank(const Monomial& m);

/// dim S_d for S = k[x_0..x_{nvars-1}].
std::size_t basis_size(int nvars, int d);

}  // namespace starconf
