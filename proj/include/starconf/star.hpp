#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "starconf/combinatorics.hpp"
#include "starconf/linalg.hpp"
#include "starconf/membership.hpp"
#include "starconf/poly.hpp"

namespace starconf {

/// (n, l, r, d): forms of degree d in n+1 variables, l linear forms, products of r of them.
struct TupleNLRD {
  int n = 1;
  int l = 1;
  int r = 1;
  int d = 1;

  bool r_within_l() const { return r <= l; }
  bool r_within_d() const { return r <= d; }
  bool feasible() const { return r_within_l() && r_within_d(); }
  /// l - r + 1: the number of hyperplanes cut together per component.
  int codim() const { return l - r + 1; }

  auto operator<=>(const TupleNLRD&) const = default;
};

/// l linear forms in n+1 variables.
template <ExactField F>
struct LinearFormSet {
  int n = 1;
  std::vector<MultiPoly<F>> forms;

  int nvars() const { return n + 1; }
  int size() const { return static_cast<int>(forms.size()); }
  const F& field() const { return forms.front().field(); }
  const MultiPoly<F>& operator[](int i) const { return forms[static_cast<std::size_t>(i)]; }

  static LinearFormSet from_forms(std::vector<MultiPoly<F>> forms) {
    if (forms.empty()) throw std::invalid_argument("LinearFormSet: empty");
    const int nvars = forms.front().nvars();
    for (const auto& L : forms) {
      if (L.degree() != 1 || L.nvars() != nvars) throw std::invalid_argument("LinearFormSet: forms must be linear in a common ring");
    }
    return LinearFormSet{nvars - 1, std::move(forms)};
  }
};

/// A point of P^n with first nonzero coordinate 1. `label` lists the (0-based)
/// forms that do not vanish there when the point comes from a star configuration.
template <ExactField F>
struct ProjectivePoint {
  std::vector<typename F::Element> coords;
  Subset label;

  bool operator==(const ProjectivePoint&) const = default;
};

template <ExactField F>
void normalize_point(const F& field, std::vector<typename F::Element>& coords) {
  auto it = std::find_if(coords.begin(), coords.end(), [&](const auto& c) { return !field.is_zero(c); });
  if (it == coords.end()) throw std::invalid_argument("projective point has all coordinates zero");
  const auto inv = field.inv(*it);
  for (auto& c : coords) c = field.mul(c, inv);
}

template <ExactField F>
bool is_general_position(const LinearFormSet<F>& set) {
  const int l = set.size();
  const int k = std::min(l, set.nvars());
  const F& field = set.field();
  for (const Subset& s : k_subsets(l, k)) {
    DenseMatrix<F> m(field, static_cast<std::size_t>(k), static_cast<std::size_t>(set.nvars()));
    for (int i = 0; i < k; ++i) {
      const auto coeffs = linear_coefficients(set[s[static_cast<std::size_t>(i)]]);
      for (int j = 0; j < set.nvars(); ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coeffs[static_cast<std::size_t>(j)];
    }
    if (rank(m) != static_cast<std::size_t>(k)) return false;
  }
  return true;
}

class GeneralPositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGeneralFormAttempts = 100;

/// l random linear forms in n+1 variables in general position; redraws from the
/// same rng stream until the check passes.
template <ExactField F>
LinearFormSet<F> random_general_forms(const F& field, int n, int l, Rng& rng) {
  if (n < 1 || l < 1) throw std::invalid_argument("random_general_forms: n and l must be >= 1");
  for (int attempt = 0; attempt < kGeneralFormAttempts; ++attempt) {
    LinearFormSet<F> set{n, {}};
    for (int i = 0; i < l; ++i) set.forms.push_back(random_form(field, n + 1, 1, rng));
    if (is_general_position(set)) return set;
  }
  throw GeneralPositionError("no general linear forms after " + std::to_string(kGeneralFormAttempts) + " attempts");
}

/// L_sigma for every r-subset sigma of the forms, lexicographic.
template <ExactField F>
std::vector<MultiPoly<F>> star_generators(const LinearFormSet<F>& set, int r) {
  return subset_products(set.forms, r);
}

/// One point per n-subset tau (lexicographic): the common zero of the forms in tau.
template <ExactField F>
std::vector<ProjectivePoint<F>> star_points(const LinearFormSet<F>& set) {
  const int n = set.n;
  const int l = set.size();
  if (l < n) throw std::invalid_argument("star_points: need at least n forms");
  const F& field = set.field();
  std::vector<ProjectivePoint<F>> out;
  for (const Subset& tau : k_subsets(l, n)) {
    DenseMatrix<F> m(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) {
      const auto coeffs = linear_coefficients(set[tau[static_cast<std::size_t>(i)]]);
      for (int j = 0; j <= n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coeffs[static_cast<std::size_t>(j)];
    }
    auto ker = nullspace(m);
    if (ker.size() != 1) throw GeneralPositionError("degenerate intersection for forms {" + subset_key(tau) + "}");
    normalize_point(field, ker.front());
    out.push_back(ProjectivePoint<F>{std::move(ker.front()), complement(tau, l)});
  }
  return out;
}

template <ExactField F>
struct StarConfiguration {
  LinearFormSet<F> forms;
  int r = 1;
  std::vector<Subset> sigmas;
  std::vector<MultiPoly<F>> generators;
  std::vector<ProjectivePoint<F>> points;  // filled only when l - r + 1 = n

  bool is_empty() const { return forms.size() - r + 1 > forms.n; }
};

template <ExactField F>
StarConfiguration<F> make_star_configuration(const LinearFormSet<F>& set, int r) {
  StarConfiguration<F> star{set, r, k_subsets(set.size(), r), star_generators(set, r), {}};
  if (set.size() - r + 1 == set.n) star.points = star_points(set);
  return star;
}

/// min{C(n+t, n), C(l, n)}
std::int64_t expected_hf(int n, int l, int t);

/// n - (l - r + 1), or nullopt when the configuration is empty.
std::optional<int> star_dimension(int n, int l, int r);

/// dim (S / (gens))_t = dim S_t - dim (gens)_t.
template <ExactField F>
std::size_t hilbert_function(const F& field, int nvars, const std::vector<MultiPoly<F>>& gens, int t) {
  return basis_size(nvars, t) - ideal_dim(field, nvars, gens, t);
}

}  // namespace starconf
