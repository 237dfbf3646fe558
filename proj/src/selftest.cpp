#include "starconf/selftest.hpp"

#include <functional>
#include <sstream>

#include "starconf/certify.hpp"
#include "starconf/classifier.hpp"
#include "starconf/linalg.hpp"
#include "starconf/membership.hpp"
#include "starconf/star.hpp"

namespace starconf {

namespace {

using Check = std::function<std::string(Rng&)>;  // empty string on success

std::string ring_axioms(Rng& rng) {
  const PrimeField f;
  for (int i = 0; i < 100; ++i) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return "commutativity";
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return "distributivity";
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return "associativity";
    if (!f.is_zero(a) && f.mul(a, f.inv(a)) != f.one()) return "inverse";
  }
  return {};
}

std::string rank_transpose(Rng& rng) {
  const PrimeField f(32003);
  for (int trial = 0; trial < 10; ++trial) {
    DenseMatrix<PrimeField> m(f, 8, 11);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 11; ++j) m(i, j) = (rng() % 3 == 0) ? f.random(rng) : 0;
    }
    if (rank(m) != rank(m.transpose())) return "rank(A) != rank(A^T)";
  }
  return {};
}

std::string a_matrix_det(Rng&) {
  const RationalField q;
  for (int r = 2; r <= 7; ++r) {
    const mpq_class want = (r % 2 == 0 ? -1 : 1) * (r - 1);
    if (det(a_matrix(q, r)) != want) return "det A_" + std::to_string(r);
  }
  return {};
}

std::string star_hilbert(Rng& rng) {
  const PrimeField f;
  for (auto [n, l] : {std::pair{2, 5}, std::pair{3, 5}, std::pair{3, 6}}) {
    const auto set = random_general_forms(f, n, l, rng);
    const auto gens = star_generators(set, l - n + 1);
    for (int t = 0; t <= l; ++t) {
      if (static_cast<std::int64_t>(hilbert_function(f, set.nvars(), gens, t)) != expected_hf(n, l, t)) {
        return "HF mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l) + " t=" + std::to_string(t);
      }
    }
  }
  return {};
}

std::string certify_both(Rng& rng) {
  for (Strategy s : {Strategy::MacaulayRank, Strategy::EvaluationMatrix}) {
    const auto cert = certify_tuple(3, 5, s, FieldConfig::prime_field(), rng(), kDefaultRetries);
    if (cert.verdict != Verdict::Certified) return to_string(s) + " inconclusive";
    const auto back = certificate_from_json(nlohmann::json::parse(to_json(cert).dump()));
    if (recheck(back) != cert.achieved_rank) return to_string(s) + " recheck disagrees";
  }
  return {};
}

std::string planted_decomposition(Rng& rng) {
  const PrimeField f;
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto sel = random_m_selection(set, 2, 4, rng);
  const Decomposition<PrimeField> planted{set.forms, 2, sel.sigmas, sel.m};
  const auto target = planted.reconstruct();
  const auto dec = decompose(target, set.forms, 2);
  if (!dec) return "planted form not found in the ideal";
  if (!(dec->reconstruct() == target)) return "reconstruction differs";
  return {};
}

std::string classifier_consistency(Rng&) {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= n + 6; ++l) {
      for (int r = 1; r <= l; ++r) {
        for (int d = 1; d <= 10; ++d) {
          const auto c = classify(n, l, r, d);
          const bool feasible = r <= d;
          if (!feasible && c.verdict != ClassVerdict::Infeasible) return "infeasible tuple not flagged";
          if (feasible && l - r + 1 > n && c.verdict != ClassVerdict::AlwaysYes) return "codim > n must be AlwaysYes";
          if (c.bound_value && *c.bound_value < 0 && c.verdict == ClassVerdict::GenericYes) return "negative bound marked GenericYes";
        }
      }
    }
  }
  return {};
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"field ring axioms", ring_axioms},
      {"rank of transpose", rank_transpose},
      {"det of A_r", a_matrix_det},
      {"Hilbert function of star points", star_hilbert},
      {"certify (3,5,3,5) both strategies", certify_both},
      {"planted decomposition", planted_decomposition},
      {"classifier consistency", classifier_consistency},
  };
  std::vector<SelftestResult> out;
  Rng rng(seed);
  for (const auto& [name, check] : checks) {
    SelftestResult r{name, false, {}};
    try {
      r.detail = check(rng);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace starconf
