#include "doctest.h"

#include "starconf/certify.hpp"
#include "starconf/membership.hpp"
#include "starconf/poly_io.hpp"

using namespace starconf;

namespace {

// 1-based subset helper for readability against the written rule
Subset s1(std::initializer_list<int> one_based) {
  Subset out;
  for (int i : one_based) out.push_back(i - 1);
  return out;
}

PowerRecipe power(std::initializer_list<int> one_based_base, int e) { return {s1(one_based_base), e}; }

template <class F>
MSelection<F> zero_selection(const LinearFormSet<F>& set, int d) {
  MSelection<F> sel{d, k_subsets(set.size(), 3), {}};
  for (std::size_t s = 0; s < sel.sigmas.size(); ++s) sel.m.emplace_back(set.field(), set.nvars(), d - 3);
  return sel;
}

}  // namespace

TEST_CASE("witness M-selection") {
  const auto w25 = witness_m(2, 5);
  CHECK(w25.sigmas.size() == 4);
  CHECK(w25.at(s1({1, 2, 4})) == power({2}, 2));
  CHECK(w25.at(s1({1, 3, 4})) == power({4}, 2));
  CHECK(w25.at(s1({2, 3, 4})) == power({3}, 2));
  CHECK(w25.at(s1({1, 2, 3})) == power({1, 2}, 2));

  const auto w34 = witness_m(3, 4);
  CHECK(w34.sigmas.size() == 10);
  CHECK(w34.at(s1({1, 4, 5})) == power({5}, 1));
  CHECK(w34.at(s1({1, 2, 5})) == power({2}, 1));
  CHECK(w34.at(s1({3, 4, 5})) == power({4}, 1));

  for (const auto& e : witness_m(2, 3).entries) CHECK(e.exponent == 0);
  CHECK(witness_m(2, 3).entries.size() == 4);
  CHECK_THROWS(witness_m(2, 2));
  CHECK_THROWS(witness_m(1, 4));

  const PrimeField f;
  Rng rng(1);
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto sel = instantiate(w25, set);
  CHECK(sel.at(s1({1, 3, 4})) == set[3] * set[3]);
  CHECK(sel.at(s1({1, 2, 3})) == (set[0] + set[1]).pow(2));
  for (const auto& m : instantiate(witness_m(2, 3), set).m) CHECK(m == MultiPoly<PrimeField>::constant(f, 3, 1));
}

TEST_CASE("Q forms") {
  const PrimeField f;
  Rng rng(2);
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto sel = instantiate(witness_m(2, 3), set);
  const auto q = build_q(set, sel).q;
  REQUIRE(q.size() == 4);
  CHECK(q[0] == set[1] * set[2] + set[1] * set[3] + set[2] * set[3]);
  for (const auto& qi : q) CHECK(qi.degree() == 2);

  for (const auto& qi : build_q(set, zero_selection(set, 5)).q) CHECK(qi.is_zero());

  auto bad = sel;
  bad.m[1] = random_form(f, 3, 1, rng);
  CHECK_THROWS(build_q(set, bad));

  // relabeling two forms permutes the Q's
  const auto rsel = random_m_selection(set, 3, 4, rng);
  auto swapped = set;
  std::swap(swapped.forms[0], swapped.forms[2]);
  MSelection<PrimeField> ssel{4, rsel.sigmas, {}};
  for (const Subset& sigma : rsel.sigmas) {
    Subset image;
    for (int i : sigma) image.push_back(i == 0 ? 2 : i == 2 ? 0 : i);
    std::sort(image.begin(), image.end());
    ssel.m.push_back(rsel.at(image));
  }
  const auto qa = build_q(set, rsel).q;
  const auto qb = build_q(swapped, ssel).q;
  CHECK(qb[0] == qa[2]);
  CHECK(qb[2] == qa[0]);
  CHECK(qb[1] == qa[1]);
  CHECK(qb[3] == qa[3]);
}

TEST_CASE("degree identity sum L_i Q_i = 3 sum L_sigma M_sigma") {
  const PrimeField f;
  const RationalField q;
  Rng rng(3);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 3; d <= 5; ++d) {
      const auto set = random_general_forms(f, n, n + 2, rng);
      const auto sel = random_m_selection(set, 3, d, rng);
      const auto Q = build_q(set, sel).q;
      MultiPoly<PrimeField> lhs(f, n + 1, d);
      for (int i = 0; i < set.size(); ++i) lhs += set[i] * Q[static_cast<std::size_t>(i)];
      const Decomposition<PrimeField> dec{set.forms, 3, sel.sigmas, sel.m};
      CHECK(lhs == dec.reconstruct().scaled(3));
    }
  }
  const auto set = random_general_forms(q, 3, 5, rng);
  const auto sel = random_m_selection(set, 3, 4, rng);
  const auto Q = build_q(set, sel).q;
  MultiPoly<RationalField> lhs(q, 4, 4);
  for (int i = 0; i < 5; ++i) lhs += set[i] * Q[static_cast<std::size_t>(i)];
  CHECK(lhs == Decomposition<RationalField>{set.forms, 3, sel.sigmas, sel.m}.reconstruct().scaled(3));
}

TEST_CASE("tangent ideal generators") {
  const PrimeField f;
  Rng rng(4);
  const auto s2 = random_general_forms(f, 2, 4, rng);
  const auto g2 = tangent_ideal_gens(s2, instantiate(witness_m(2, 4), s2));
  CHECK(g2.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g2[i].degree() == 3);
  for (std::size_t i = 4; i < 8; ++i) CHECK(g2[i].degree() == 3);
  const auto s3 = random_general_forms(f, 3, 5, rng);
  CHECK(tangent_ideal_gens(s3, instantiate(witness_m(3, 3), s3)).size() == 15);
  const auto gz = tangent_ideal_gens(s2, zero_selection(s2, 4));
  for (std::size_t i = 4; i < gz.size(); ++i) CHECK(gz[i].is_zero());
  CHECK(ideal_dim(f, 3, gz, 4) == ideal_dim(f, 3, star_generators(s2, 3), 4));
}

TEST_CASE("evaluation matrix layout") {
  const EvaluationLayout l2(2);
  CHECK(l2.rows.size() == 6);
  CHECK(l2.cols.size() == 6);
  CHECK(l2.cols[0] == std::pair{2, 0});
  CHECK(l2.cols[1] == std::pair{0, 1});
  CHECK(l2.cols[2] == std::pair{1, 2});
  CHECK(l2.cols[3] == std::pair{3, 0});
  const EvaluationLayout l4(4);
  CHECK(l4.rows.size() == 15);
  CHECK(l4.cols.size() == 15);
  const auto [r3, c3] = l4.level_block(3);
  CHECK(r3.size() == 3);
  CHECK(c3.size() == 3);
  for (int k = 4; k <= 6; ++k) {
    const auto [rk, ck] = l4.level_block(k);
    CHECK(static_cast<int>(rk.size()) == k - 1);
    CHECK(static_cast<int>(ck.size()) == k - 1);
  }
  CHECK_THROWS(l4.level_block(7));
  CHECK_THROWS(l4.level_block(2));
}

TEST_CASE("evaluation matrix for n = 2, d = 3") {
  const PrimeField f;
  Rng rng(5);
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto sel = instantiate(witness_m(2, 3), set);
  const auto m = evaluation_matrix(set, sel);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 6);
  CHECK(rank(m) == 6);

  // level-4 block: diag(L_4(p)^2 L_i(p)) times the matrix J - I
  const EvaluationLayout layout(2);
  const auto [ri, ci] = layout.level_block(4);
  const auto block = m.select(ri, ci);
  auto points = star_points(set);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  DenseMatrix<PrimeField> diag(f, 3, 3);
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& p = points[ri[t]];
    CHECK(p.label == Subset{static_cast<int>(t), 3});
    const auto l4 = set[3].eval(p.coords);
    diag(t, t) = f.mul(f.mul(l4, l4), set[static_cast<int>(t)].eval(p.coords));
  }
  CHECK(block == diag * a_matrix(f, 3));
}

TEST_CASE("evaluation matrix is block lower triangular with nonsingular level blocks") {
  const PrimeField f;
  Rng rng(6);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 3; d <= 5; ++d) {
      const auto set = random_general_forms(f, n, n + 2, rng);
      const auto m = evaluation_matrix(set, instantiate(witness_m(n, d), set));
      const EvaluationLayout layout(n);
      for (int k = 3; k <= n + 2; ++k) {
        const auto [ri, ci] = layout.level_block(k);
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(k);
        CHECK(det(m.select(ri, ci)) != 0);
        // rows from lower levels see zeros in the level-k columns
        for (std::size_t i = 0; i < layout.rows.size(); ++i) {
          if (std::max(3, layout.rows[i][1] + 1) >= k) continue;
          for (std::size_t j : ci) CHECK(m(i, j) == 0);
        }
      }
      CHECK(rank(m) == layout.rows.size());
    }
  }
}

TEST_CASE("literal L_1 power for M_123 leaves the base block singular") {
  const PrimeField f;
  Rng rng(7);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 4; d <= 6; ++d) {
      const auto set = random_general_forms(f, n, n + 2, rng);
      auto sel = instantiate(witness_m(n, d), set);
      sel.m[0] = set[0].pow(static_cast<unsigned>(d - 3));  // sigma = {1,2,3}
      const auto m = evaluation_matrix(set, sel);
      const auto [ri, ci] = EvaluationLayout(n).level_block(3);
      CHECK(det(m.select(ri, ci)) == 0);
      CHECK(rank(m) < m.rows());
    }
  }
}

TEST_CASE("evaluation matrix rejects degenerate points") {
  const PrimeField f;
  std::vector<MultiPoly<PrimeField>> forms;
  for (const char* s : {"x0", "x1", "x0 + x1", "x2"}) forms.push_back(parse_poly(f, s, 3, 1));
  const auto set = LinearFormSet<PrimeField>::from_forms(forms);
  CHECK_THROWS(evaluation_matrix(set, instantiate(witness_m(2, 3), set)));
}

TEST_CASE("certify_tuple") {
  const auto fp = FieldConfig::prime_field();
  const auto c23 = certify_tuple(2, 3, Strategy::MacaulayRank, fp, 1);
  CHECK(c23.verdict == Verdict::Certified);
  CHECK(c23.achieved_rank == 10);
  CHECK(c23.target_rank == 10);
  CHECK(c23.tuple == TupleNLRD{2, 4, 3, 3});

  const auto c33 = certify_tuple(3, 3, Strategy::MacaulayRank, fp, 1);
  CHECK(c33.verdict == Verdict::Certified);
  CHECK(c33.target_rank == 20);

  const auto e44 = certify_tuple(4, 4, Strategy::EvaluationMatrix, fp, 1);
  CHECK(e44.verdict == Verdict::Certified);
  CHECK(e44.achieved_rank == 15);
  CHECK(e44.target_rank == 15);

  CHECK_THROWS_AS(certify_tuple(2, 2, Strategy::MacaulayRank, fp, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_tuple(1, 3, Strategy::MacaulayRank, fp, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_tuple(2, 3, Strategy::MacaulayRank, fp, 1, -1), std::invalid_argument);
  CHECK_THROWS(certify_tuple(2, 3, Strategy::MacaulayRank, FieldConfig::prime_field(1000), 1));

  // pure in (seed, field)
  CHECK(certify_tuple(3, 4, Strategy::MacaulayRank, fp, 9) == certify_tuple(3, 4, Strategy::MacaulayRank, fp, 9));

  const auto qc = certify_tuple(2, 4, Strategy::MacaulayRank, FieldConfig::rational(), 1);
  CHECK(qc.verdict == Verdict::Certified);
  CHECK(qc.achieved_rank == 15);
}

TEST_CASE("certificate recheck and serialization") {
  for (Strategy s : {Strategy::MacaulayRank, Strategy::EvaluationMatrix}) {
    const auto cert = certify_tuple(3, 5, s, FieldConfig::prime_field(), 4);
    REQUIRE(cert.verdict == Verdict::Certified);
    CHECK(cert.achieved_rank == cert.target_rank);
    CHECK(recheck(cert) == cert.achieved_rank);

    const auto j = to_json(cert);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"tuple", "field", "seed", "strategy", "achieved_rank", "target_rank", "verdict",
                                           "retries_used", "witness"});
    CHECK(j["witness"]["M"].size() == 10);
    CHECK(j["witness"]["L"].size() == 5);
    CHECK(j["witness"]["M"].contains("1,2,3"));

    const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == cert);
    CHECK(recheck(back) == cert.achieved_rank);
  }

  auto cert = certify_tuple(2, 4, Strategy::MacaulayRank, FieldConfig::prime_field(), 2);
  cert.witness_m.pop_back();
  CHECK_THROWS(recheck(cert));
}

TEST_CASE("Fp witness recomputed over Q") {
  for (auto [n, d] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 4}}) {
    const auto cert = certify_tuple(n, d, Strategy::MacaulayRank, FieldConfig::prime_field(), 3);
    REQUIRE(cert.verdict == Verdict::Certified);
    CHECK(recheck_over_rationals(cert) == cert.target_rank);
  }
}

TEST_CASE("experimental certification") {
  const auto fp = FieldConfig::prime_field();
  CHECK(experimental_certify({2, 4, 3, 3}, fp, 1, 3).verdict == Verdict::Certified);
  const auto all = experimental_certify({2, 4, 2, 2}, fp, 1, 3);
  CHECK(all.verdict == Verdict::Certified);
  CHECK(all.achieved_rank == 6);
  CHECK_THROWS(experimental_certify({2, 4, 3, 2}, fp, 1, 3));
  CHECK_THROWS(experimental_certify({2, 2, 3, 4}, fp, 1, 3));

  // six lines in the plane: excluded by the dimension count, so every attempt falls short
  const auto neg = experimental_certify({2, 6, 5, 5}, fp, 1, 2);
  CHECK(neg.verdict == Verdict::Inconclusive);
  CHECK(neg.retries_used == 2);
  CHECK(neg.achieved_rank < neg.target_rank);

  const auto open = experimental_certify({3, 3, 2, 3}, fp, 1, 1);
  CHECK(open.verdict == Verdict::Inconclusive);
  const auto back = certificate_from_json(nlohmann::json::parse(to_json(open).dump()));
  CHECK(recheck(back) == open.achieved_rank);
}
