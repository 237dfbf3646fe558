#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "starconf/combinatorics.hpp"
#include "starconf/linalg.hpp"
#include "starconf/poly.hpp"

namespace starconf {

/// Where a Macaulay column comes from: generator index times a monomial.
struct ColumnSource {
  std::size_t generator;
  Monomial multiplier;
};

/// Degree-d slice of the ideal generated by `gens`, one sparse column per
/// (generator, monomial of complementary degree). Rows follow monomial_basis(nvars, d).
template <ExactField F>
struct MacaulayMatrix {
  using Element = typename F::Element;
  using SparseColumn = std::vector<std::pair<std::size_t, Element>>;

  F field;
  int nvars = 1;
  int degree = 0;
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
  std::vector<ColumnSource> provenance;

  std::size_t cols() const { return columns.size(); }

  std::vector<Element> dense_column(std::size_t j) const {
    std::vector<Element> v(rows, field.zero());
    for (const auto& [i, c] : columns[j]) v[i] = c;
    return v;
  }

  DenseMatrix<F> to_dense() const {
    DenseMatrix<F> m(field, rows, cols());
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& [i, c] : columns[j]) m(i, j) = c;
    return m;
  }
};

namespace detail {

template <ExactField F>
void check_generators(int nvars, const std::vector<MultiPoly<F>>& gens) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator variable count does not match the ring");
  }
}

/// Calls sink(source, sparse column) for every Macaulay column in layout order.
template <ExactField F, class Sink>
void for_each_macaulay_column(int nvars, const std::vector<MultiPoly<F>>& gens, int d, Sink&& sink) {
  using Element = typename F::Element;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int shift = d - gens[g].degree();
    if (shift < 0) continue;  // contributes nothing in degree d
    for (const Monomial& m : monomial_basis(nvars, shift)) {
      std::vector<std::pair<std::size_t, Element>> col;
      col.reserve(gens[g].size());
      for (const auto& [t, c] : gens[g].terms()) col.emplace_back(monomial_rank(t * m), c);
      if (!sink(ColumnSource{g, m}, std::move(col))) return;
    }
  }
}

}  // namespace detail

template <ExactField F>
MacaulayMatrix<F> macaulay_matrix(const F& field, int nvars, const std::vector<MultiPoly<F>>& gens, int d) {
  detail::check_generators(nvars, gens);
  MacaulayMatrix<F> mm{field, nvars, d, basis_size(nvars, d), {}, {}};
  detail::for_each_macaulay_column<F>(nvars, gens, d, [&](ColumnSource src, auto&& col) {
    mm.columns.push_back(std::move(col));
    mm.provenance.push_back(std::move(src));
    return true;
  });
  return mm;
}

/// dim_k (I)_d. Columns stream straight into a RankAccumulator, which stops as
/// soon as the slice fills S_d.
template <ExactField F>
std::size_t ideal_dim(const F& field, int nvars, const std::vector<MultiPoly<F>>& gens, int d) {
  detail::check_generators(nvars, gens);
  const std::size_t rows = basis_size(nvars, d);
  RankAccumulator<F> acc(field, rows);
  std::vector<typename F::Element> buf(rows, field.zero());
  detail::for_each_macaulay_column<F>(nvars, gens, d, [&](const ColumnSource&, auto&& col) {
    for (const auto& [i, c] : col) buf[i] = c;
    acc.insert(buf);
    for (const auto& [i, c] : col) buf[i] = field.zero();
    return !acc.full();
  });
  return acc.rank();
}

/// Proof of membership F = sum_g h_g * g.
template <ExactField F>
struct Membership {
  std::vector<typename F::Element> column_multipliers;  // aligned with the Macaulay columns
  std::vector<MultiPoly<F>> generator_multipliers;      // h_g, degree d - deg g (zero when deg g > d)
};

/// Membership of the homogeneous form `target` in the ideal generated by `gens`.
template <ExactField F>
std::optional<Membership<F>> contains(const std::vector<MultiPoly<F>>& gens, const MultiPoly<F>& target) {
  const F& field = target.field();
  const int nvars = target.nvars();
  detail::check_generators(nvars, gens);
  const int d = target.degree();
  const MacaulayMatrix<F> mm = macaulay_matrix(field, nvars, gens, d);
  const auto rhs = target.coefficient_vector();
  auto x = solve(mm.to_dense(), std::span<const typename F::Element>(rhs));
  if (!x) return std::nullopt;

  Membership<F> out;
  out.column_multipliers = std::move(*x);
  for (const auto& g : gens) out.generator_multipliers.emplace_back(field, nvars, std::max(0, d - g.degree()));
  for (std::size_t j = 0; j < mm.cols(); ++j) {
    const auto& src = mm.provenance[j];
    out.generator_multipliers[src.generator].add_term(src.multiplier, out.column_multipliers[j]);
  }
  return out;
}

/// F = sum over r-subsets sigma of L_sigma * M_sigma.
template <ExactField F>
struct Decomposition {
  std::vector<MultiPoly<F>> forms;
  int r = 0;
  std::vector<Subset> sigmas;     // lexicographic r-subsets of the form indices
  std::vector<MultiPoly<F>> m;    // aligned with sigmas, degree d - r

  MultiPoly<F> reconstruct() const {
    const auto& f0 = forms.front();
    MultiPoly<F> acc(f0.field(), f0.nvars(), m.empty() ? r : m.front().degree() + r);
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      MultiPoly<F> term = m[s];
      for (int i : sigmas[s]) term = term * forms[static_cast<std::size_t>(i)];
      acc += term;
    }
    return acc;
  }
};

/// Products L_sigma over every r-subset, lexicographic.
template <ExactField F>
std::vector<MultiPoly<F>> subset_products(const std::vector<MultiPoly<F>>& forms, int r) {
  const int l = static_cast<int>(forms.size());
  if (r < 1 || r > l) throw std::invalid_argument("subset size r must satisfy 0 < r <= l");
  std::vector<MultiPoly<F>> out;
  for (const Subset& s : k_subsets(l, r)) {
    MultiPoly<F> p = forms[static_cast<std::size_t>(s[0])];
    for (std::size_t k = 1; k < s.size(); ++k) p = p * forms[static_cast<std::size_t>(s[k])];
    out.push_back(std::move(p));
  }
  return out;
}

/// Finds M_sigma of degree deg(F) - r with sum L_sigma M_sigma = F, free
/// variables zeroed. Returns nullopt when F is not in the ideal; throws
/// std::invalid_argument when r exceeds deg(F) or the number of forms.
template <ExactField F>
std::optional<Decomposition<F>> decompose(const MultiPoly<F>& target, const std::vector<MultiPoly<F>>& forms, int r) {
  if (forms.empty()) throw std::invalid_argument("decompose: no linear forms");
  for (const auto& L : forms) {
    if (L.degree() != 1) throw std::invalid_argument("decompose: forms must be linear");
  }
  if (r > target.degree()) throw std::invalid_argument("decompose: r exceeds the degree of F");
  const auto gens = subset_products(forms, r);
  auto mem = contains(gens, target);
  if (!mem) return std::nullopt;
  Decomposition<F> out;
  out.forms = forms;
  out.r = r;
  out.sigmas = k_subsets(static_cast<int>(forms.size()), r);
  out.m = std::move(mem->generator_multipliers);
  return out;
}

}  // namespace starconf
