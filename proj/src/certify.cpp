#include "starconf/certify.hpp"

#include <algorithm>
#include <map>

#include "starconf/membership.hpp"
#include "starconf/poly_io.hpp"

namespace starconf {

std::string to_string(Strategy s) { return s == Strategy::MacaulayRank ? "MacaulayRank" : "EvaluationMatrix"; }
std::string to_string(Verdict v) { return v == Verdict::Certified ? "Certified" : "Inconclusive"; }

Strategy strategy_from_string(const std::string& text) {
  if (text == "MacaulayRank" || text == "macaulay") return Strategy::MacaulayRank;
  if (text == "EvaluationMatrix" || text == "evaluation") return Strategy::EvaluationMatrix;
  throw std::invalid_argument("unknown strategy '" + text + "'");
}

Verdict verdict_from_string(const std::string& text) {
  if (text == "Certified") return Verdict::Certified;
  if (text == "Inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

const PowerRecipe& WitnessRecipe::at(const Subset& sigma) const {
  for (std::size_t s = 0; s < sigmas.size(); ++s) {
    if (sigmas[s] == sigma) return entries[s];
  }
  throw std::out_of_range("WitnessRecipe: no entry for {" + subset_key(sigma) + "}");
}

WitnessRecipe witness_m(int n, int d) {
  if (n < 2) throw std::invalid_argument("witness_m: n must be >= 2");
  if (d < 3) throw std::invalid_argument("witness_m: d must be >= 3");
  WitnessRecipe out{n, d, k_subsets(n + 2, 3), {}};
  const int e = d - 3;
  for (const Subset& sigma : out.sigmas) {
    // 0-based indices; the 1-based rule reads i < j < k
    const int i = sigma[0];
    const int j = sigma[1];
    const int k = sigma[2];
    if (e == 0) {
      out.entries.push_back({{}, 0});
    } else if (k == 2) {
      out.entries.push_back({{0, 1}, e});
    } else if (i == 0 && j == k - 1) {
      out.entries.push_back({{k}, e});
    } else {
      out.entries.push_back({{j}, e});
    }
  }
  return out;
}

EvaluationLayout::EvaluationLayout(int n_) : n(n_), rows(k_subsets(n_ + 2, 2)) {
  if (n < 2) throw std::invalid_argument("EvaluationLayout: n must be >= 2");
  cols = {{2, 0}, {0, 1}, {1, 2}};
  for (int k = 3; k <= n + 1; ++k) {
    for (int b = 0; b < k; ++b) cols.emplace_back(k, b);
  }
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> EvaluationLayout::level_block(int k) const {
  if (k < 3 || k > n + 2) throw std::out_of_range("level_block: level must lie in 3..n+2");
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int top = rows[i][1];
    if ((k == 3 && top <= 2) || (k > 3 && top == k - 1)) ri.push_back(i);
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if ((k == 3 && j < 3) || (k > 3 && cols[j].first == k - 1)) ci.push_back(j);
  }
  return {ri, ci};
}

namespace {

template <ExactField F>
F make_field(const FieldConfig& cfg);

template <>
PrimeField make_field<PrimeField>(const FieldConfig& cfg) {
  return PrimeField(cfg.prime);
}

template <>
RationalField make_field<RationalField>(const FieldConfig&) {
  return RationalField{};
}

struct Rank {
  std::size_t achieved = 0;
  bool side_condition = true;  // the star-ideal Hilbert check for the evaluation route
};

template <ExactField F>
Rank compute_rank(const LinearFormSet<F>& set, const MSelection<F>& sel, Strategy strategy) {
  const F& field = set.field();
  if (strategy == Strategy::MacaulayRank) return {ideal_dim(field, set.nvars(), tangent_ideal_gens(set, sel), sel.d), true};
  const std::size_t achieved = rank(evaluation_matrix(set, sel));
  const std::size_t points = static_cast<std::size_t>(binomial(set.n + 2, 2));
  const bool hf_ok = hilbert_function(field, set.nvars(), star_generators(set, 3), sel.d) == points;
  return {achieved, hf_ok};
}

template <ExactField F>
void store_witness(Certificate& cert, const LinearFormSet<F>& set, const MSelection<F>& sel) {
  cert.witness_l.clear();
  cert.witness_m.clear();
  for (const auto& L : set.forms) cert.witness_l.push_back(format_poly(L));
  for (std::size_t s = 0; s < sel.sigmas.size(); ++s) cert.witness_m.emplace_back(subset_key(sel.sigmas[s]), format_poly(sel.m[s]));
}

/// Shared retry loop; `draw_m` produces the M-selection for freshly drawn forms.
template <ExactField F, class DrawM>
Certificate run_attempts(Certificate cert, const F& field, int retries, DrawM&& draw_m) {
  const TupleNLRD& t = cert.tuple;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    cert.retries_used = attempt;
    Rng rng(cert.seed + static_cast<std::uint64_t>(attempt));
    try {
      const auto forms = random_general_forms(field, t.n, t.l, rng);
      const auto sel = draw_m(forms, rng);
      store_witness(cert, forms, sel);
      const Rank r = compute_rank(forms, sel, cert.strategy);
      cert.achieved_rank = r.achieved;
      if (r.achieved == cert.target_rank && r.side_condition) {
        cert.verdict = Verdict::Certified;
        return cert;
      }
    } catch (const GeneralPositionError&) {
      cert.achieved_rank = 0;
    }
  }
  cert.verdict = Verdict::Inconclusive;
  return cert;
}

template <ExactField F>
Certificate certify_impl(int n, int d, Strategy strategy, const FieldConfig& cfg, std::uint64_t seed, int retries) {
  const F field = make_field<F>(cfg);
  Certificate cert;
  cert.tuple = {n, n + 2, 3, d};
  cert.field = cfg;
  cert.seed = seed;
  cert.strategy = strategy;
  cert.target_rank = strategy == Strategy::MacaulayRank ? basis_size(n + 1, d)
                                                        : static_cast<std::size_t>(binomial(n + 2, 2));
  const WitnessRecipe recipe = witness_m(n, d);
  return run_attempts(std::move(cert), field, retries,
                      [&](const LinearFormSet<F>& forms, Rng&) { return instantiate(recipe, forms); });
}

template <ExactField F>
Certificate experimental_impl(const TupleNLRD& t, const FieldConfig& cfg, std::uint64_t seed, int retries) {
  const F field = make_field<F>(cfg);
  Certificate cert;
  cert.tuple = t;
  cert.field = cfg;
  cert.seed = seed;
  cert.strategy = Strategy::MacaulayRank;
  cert.target_rank = basis_size(t.n + 1, t.d);
  return run_attempts(std::move(cert), field, retries,
                      [&](const LinearFormSet<F>& forms, Rng& rng) { return random_m_selection(forms, t.r, t.d, rng); });
}

template <ExactField F>
std::size_t recheck_impl(const Certificate& cert, const F& field) {
  const TupleNLRD& t = cert.tuple;
  if (cert.witness_l.empty()) throw std::invalid_argument("certificate carries no witness");
  std::vector<MultiPoly<F>> forms;
  for (const auto& s : cert.witness_l) forms.push_back(parse_poly(field, s, t.n + 1, 1));
  const auto set = LinearFormSet<F>::from_forms(std::move(forms));
  MSelection<F> sel{t.d, {}, {}};
  for (const auto& [key, poly] : cert.witness_m) {
    sel.sigmas.push_back(subset_from_key(key));
    sel.m.push_back(parse_poly(field, poly, t.n + 1, t.d - t.r));
  }
  if (sel.sigmas != k_subsets(t.l, t.r)) throw std::invalid_argument("certificate M-selection does not cover every r-subset");
  return compute_rank(set, sel, cert.strategy).achieved;
}

void check_certify_args(int n, int d, int retries) {
  if (n < 2) throw std::invalid_argument("certify: n must be >= 2");
  if (d < 3) throw std::invalid_argument("certify: need d >= r = 3");
  if (retries < 0) throw std::invalid_argument("certify: retries must be >= 0");
}

}  // namespace

Certificate certify_tuple(int n, int d, Strategy strategy, const FieldConfig& field, std::uint64_t seed, int retries) {
  check_certify_args(n, d, retries);
  field.validate();
  if (field.kind == FieldKind::PrimeField) return certify_impl<PrimeField>(n, d, strategy, field, seed, retries);
  return certify_impl<RationalField>(n, d, strategy, field, seed, retries);
}

Certificate experimental_certify(const TupleNLRD& t, const FieldConfig& field, std::uint64_t seed, int retries) {
  if (t.n < 1 || t.l < 1 || t.r < 1 || t.d < 1) throw std::invalid_argument("experimental_certify: entries must be positive");
  if (!t.feasible()) throw std::invalid_argument("experimental_certify: need r <= min(d, l)");
  if (retries < 0) throw std::invalid_argument("experimental_certify: retries must be >= 0");
  field.validate();
  if (field.kind == FieldKind::PrimeField) return experimental_impl<PrimeField>(t, field, seed, retries);
  return experimental_impl<RationalField>(t, field, seed, retries);
}

std::size_t recheck(const Certificate& cert) {
  cert.field.validate();
  if (cert.field.kind == FieldKind::PrimeField) return recheck_impl(cert, PrimeField(cert.field.prime));
  return recheck_impl(cert, RationalField{});
}

std::size_t recheck_over_rationals(const Certificate& cert) { return recheck_impl(cert, RationalField{}); }

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["tuple"] = {{"n", cert.tuple.n}, {"l", cert.tuple.l}, {"r", cert.tuple.r}, {"d", cert.tuple.d}};
  j["field"] = {{"kind", to_string(cert.field.kind)}, {"prime", cert.field.prime}};
  j["seed"] = cert.seed;
  j["strategy"] = to_string(cert.strategy);
  j["achieved_rank"] = cert.achieved_rank;
  j["target_rank"] = cert.target_rank;
  j["verdict"] = to_string(cert.verdict);
  j["retries_used"] = cert.retries_used;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [key, poly] : cert.witness_m) m[key] = poly;
  j["witness"] = {{"L", cert.witness_l}, {"M", m}};
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  const auto& t = j.at("tuple");
  c.tuple = {t.at("n").get<int>(), t.at("l").get<int>(), t.at("r").get<int>(), t.at("d").get<int>()};
  c.field.kind = field_kind_from_string(j.at("field").at("kind").get<std::string>());
  c.field.prime = j.at("field").at("prime").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.strategy = strategy_from_string(j.at("strategy").get<std::string>());
  c.achieved_rank = j.at("achieved_rank").get<std::size_t>();
  c.target_rank = j.at("target_rank").get<std::size_t>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.retries_used = j.at("retries_used").get<int>();
  c.witness_l = j.at("witness").at("L").get<std::vector<std::string>>();
  std::vector<std::pair<Subset, std::string>> m;
  for (const auto& [key, poly] : j.at("witness").at("M").items()) m.emplace_back(subset_from_key(key), poly.get<std::string>());
  std::sort(m.begin(), m.end());
  for (auto& [s, poly] : m) c.witness_m.emplace_back(subset_key(s), std::move(poly));
  return c;
}

}  // namespace starconf
