#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starconf/combinatorics.hpp"
#include "starconf/linalg.hpp"
#include "starconf/poly.hpp"
#include "starconf/star.hpp"

namespace starconf {

enum class Strategy { MacaulayRank, EvaluationMatrix };
enum class Verdict { Certified, Inconclusive };

std::string to_string(Strategy s);
std::string to_string(Verdict v);
Strategy strategy_from_string(const std::string& text);
Verdict verdict_from_string(const std::string& text);

/// One M_sigma written as (sum_{i in base} L_i)^exponent; exponent 0 means 1.
struct PowerRecipe {
  Subset base;
  int exponent = 0;
  bool operator==(const PowerRecipe&) const = default;
};

/// Field-independent description of the explicit M-selection for l = n+2, r = 3.
struct WitnessRecipe {
  int n = 2;
  int d = 3;
  std::vector<Subset> sigmas;        // all 3-subsets of [n+2], lexicographic
  std::vector<PowerRecipe> entries;  // aligned with sigmas
  const PowerRecipe& at(const Subset& sigma) const;
};

/// The explicit M-selection that makes every level block of the evaluation matrix
/// nonsingular. d = 3: every M = 1. d > 3, with sigma = {i<j<k} (1-based):
///   k >= 4:  M = L_j^{d-3}, except M_{1,k-1,k} = L_k^{d-3};
///   {1,2,3}: M = (L_1 + L_2)^{d-3}, nonzero at p_{1,2}, p_{1,3} and p_{2,3}.
WitnessRecipe witness_m(int n, int d);

/// Forms M_sigma of a common degree, one per r-subset of the l linear forms.
template <ExactField F>
struct MSelection {
  int d = 0;  // target degree; each M has degree d - r
  std::vector<Subset> sigmas;
  std::vector<MultiPoly<F>> m;

  const MultiPoly<F>& at(const Subset& sigma) const {
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      if (sigmas[s] == sigma) return m[s];
    }
    throw std::out_of_range("MSelection: no entry for {" + subset_key(sigma) + "}");
  }
};

template <ExactField F>
MSelection<F> instantiate(const WitnessRecipe& recipe, const LinearFormSet<F>& set) {
  if (set.size() != recipe.n + 2 || set.n != recipe.n) throw std::invalid_argument("witness recipe does not match the form set");
  MSelection<F> out{recipe.d, recipe.sigmas, {}};
  for (const auto& e : recipe.entries) {
    MultiPoly<F> base(set.field(), set.nvars(), 1);
    for (int i : e.base) base += set[i];
    out.m.push_back(base.pow(static_cast<unsigned>(e.exponent)));
  }
  return out;
}

/// Random M_sigma of degree d - r for every r-subset.
template <ExactField F>
MSelection<F> random_m_selection(const LinearFormSet<F>& set, int r, int d, Rng& rng) {
  if (r > d) throw std::invalid_argument("random_m_selection: r exceeds d");
  MSelection<F> out{d, k_subsets(set.size(), r), {}};
  for (std::size_t s = 0; s < out.sigmas.size(); ++s) out.m.push_back(random_form(set.field(), set.nvars(), d - r, rng));
  return out;
}

template <ExactField F>
struct QForms {
  std::vector<MultiPoly<F>> q;  // q[i] has degree d - 1
};

/// Q_i = sum over sigma containing i of (prod_{j in sigma, j != i} L_j) * M_sigma,
/// assembled from products only.
template <ExactField F>
QForms<F> build_q(const LinearFormSet<F>& set, const MSelection<F>& sel) {
  if (sel.sigmas.empty()) throw std::invalid_argument("build_q: empty M-selection");
  const int r = static_cast<int>(sel.sigmas.front().size());
  for (std::size_t s = 0; s < sel.sigmas.size(); ++s) {
    if (sel.m[s].degree() != sel.d - r) throw std::invalid_argument("build_q: M_sigma has degree != d - r");
    if (sel.m[s].nvars() != set.nvars()) throw std::invalid_argument("build_q: M_sigma lives in a different ring");
  }
  QForms<F> out;
  for (int i = 0; i < set.size(); ++i) out.q.emplace_back(set.field(), set.nvars(), sel.d - 1);
  for (std::size_t s = 0; s < sel.sigmas.size(); ++s) {
    const Subset& sigma = sel.sigmas[s];
    for (int i : sigma) {
      MultiPoly<F> term = sel.m[s];
      for (int j : sigma) {
        if (j != i) term = term * set[j];
      }
      out.q[static_cast<std::size_t>(i)] += term;
    }
  }
  return out;
}

/// The C(l, r) products L_sigma followed by Q_1..Q_l.
template <ExactField F>
std::vector<MultiPoly<F>> tangent_ideal_gens(const LinearFormSet<F>& set, const MSelection<F>& sel) {
  const int r = static_cast<int>(sel.sigmas.front().size());
  auto gens = star_generators(set, r);
  for (auto& q : build_q(set, sel).q) gens.push_back(std::move(q));
  return gens;
}

/// Row labels and column products of the evaluation matrix for l = n+2 (0-based).
struct EvaluationLayout {
  int n = 2;
  std::vector<Subset> rows;                 // point labels {r,s}, lexicographic
  std::vector<std::pair<int, int>> cols;    // (a, b): the product L_a * Q_b

  explicit EvaluationLayout(int n);

  /// Row and column indices of the diagonal block for level k (1-based, 3..n+2).
  /// Level 3 is the base block; level k >= 4 holds p_{i,k} against L_k Q_1..L_k Q_{k-1}.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> level_block(int k) const;
};

/// Values of L_a Q_b at the star points p_{r,s}.
template <ExactField F>
DenseMatrix<F> evaluation_matrix(const LinearFormSet<F>& set, const MSelection<F>& sel) {
  const int n = set.n;
  if (set.size() != n + 2) throw std::invalid_argument("evaluation_matrix: needs l = n + 2 forms");
  const F& field = set.field();
  const EvaluationLayout layout(n);
  auto points = star_points(set);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  const auto q = build_q(set, sel).q;

  DenseMatrix<F> m(field, layout.rows.size(), layout.cols.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].label != layout.rows[i]) throw std::logic_error("evaluation_matrix: unexpected point labels");
    std::vector<typename F::Element> lv, qv;
    for (int a = 0; a < set.size(); ++a) {
      lv.push_back(set[a].eval(points[i].coords));
      qv.push_back(q[static_cast<std::size_t>(a)].eval(points[i].coords));
    }
    for (std::size_t j = 0; j < layout.cols.size(); ++j) {
      const auto [a, b] = layout.cols[j];
      m(i, j) = field.mul(lv[static_cast<std::size_t>(a)], qv[static_cast<std::size_t>(b)]);
    }
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i].coords == points[i + 1].coords) throw GeneralPositionError("evaluation_matrix: star points coincide");
  }
  return m;
}

/// Machine-checkable record that I_d = S_d (or an honest failure to show it).
struct Certificate {
  TupleNLRD tuple;
  FieldConfig field;
  std::uint64_t seed = 1;
  Strategy strategy = Strategy::MacaulayRank;
  std::size_t achieved_rank = 0;
  std::size_t target_rank = 0;
  Verdict verdict = Verdict::Inconclusive;
  int retries_used = 0;
  std::vector<std::string> witness_l;                          // forms actually used
  std::vector<std::pair<std::string, std::string>> witness_m;  // subset key -> M_sigma

  bool operator==(const Certificate&) const = default;
};

inline constexpr int kDefaultRetries = 3;

/// Tangent-space certificate for the tuple (n, n+2, 3, d) with the explicit witness.
/// Attempt t (0..retries) draws its forms from seed + t.
Certificate certify_tuple(int n, int d, Strategy strategy, const FieldConfig& field, std::uint64_t seed,
                          int retries = kDefaultRetries);

/// Same construction for arbitrary (n, l, r, d) with random M_sigma.
Certificate experimental_certify(const TupleNLRD& tuple, const FieldConfig& field, std::uint64_t seed,
                                 int retries = kDefaultRetries);

/// Recomputes the achieved rank from the stored witness alone, in the certificate's field.
std::size_t recheck(const Certificate& cert);

/// Recomputes the rank after reading the stored witness as integers over Q.
std::size_t recheck_over_rationals(const Certificate& cert);

nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace starconf
