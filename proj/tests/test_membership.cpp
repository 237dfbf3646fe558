#include "doctest.h"

#include "oracles.hpp"
#include "starconf/membership.hpp"
#include "starconf/poly_io.hpp"
#include "starconf/star.hpp"

using namespace starconf;

TEST_CASE("Macaulay matrix layout") {
  const PrimeField f;
  const auto x0 = MultiPoly<PrimeField>::variable(f, 2, 0);
  const auto mm = macaulay_matrix(f, 2, {x0}, 2);
  CHECK(mm.rows == 3);
  CHECK(mm.cols() == 2);
  CHECK(rank(mm.to_dense()) == 2);
  CHECK(mm.provenance[0].generator == 0);
  CHECK(mm.provenance[0].multiplier == Monomial({1, 0}));
  CHECK(mm.dense_column(1) == std::vector<PrimeField::Element>{0, 1, 0});

  const auto empty = macaulay_matrix<PrimeField>(f, 3, {}, 4);
  CHECK(empty.cols() == 0);
  CHECK(ideal_dim<PrimeField>(f, 3, {}, 5) == 0);

  // generators of degree above d contribute nothing
  const auto cubic = x0 * x0 * x0;
  CHECK(macaulay_matrix(f, 2, {cubic, x0}, 2).cols() == 2);

  Rng rng(1);
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto gens = star_generators(set, 3);
  const auto m3 = macaulay_matrix(f, 3, gens, 3);
  CHECK(m3.rows == 10);
  CHECK(m3.cols() == 4);
  CHECK(rank(m3.to_dense()) == 4);
  CHECK(ideal_dim(f, 3, gens, 3) == 4);
  const auto m5 = macaulay_matrix(f, 3, gens, 5);
  CHECK(static_cast<std::int64_t>(m5.cols()) == 4 * oracle::choose(2 + 2, 2));
  CHECK(rank(m5.to_dense()) == ideal_dim(f, 3, gens, 5));

  const auto wrong = MultiPoly<PrimeField>::variable(f, 4, 0);
  CHECK_THROWS(macaulay_matrix(f, 3, {wrong}, 2));
}

TEST_CASE("ideal_dim is monotone and matches the Hilbert function") {
  const PrimeField f;
  Rng rng(2);
  const auto set = random_general_forms(f, 3, 5, rng);
  auto gens = star_generators(set, 3);
  std::size_t prev = 0;
  std::vector<MultiPoly<PrimeField>> partial;
  for (const auto& g : gens) {
    partial.push_back(g);
    const std::size_t now = ideal_dim(f, 4, partial, 4);
    CHECK(now >= prev);
    prev = now;
  }
  for (int t = 0; t <= 6; ++t) {
    CHECK(static_cast<std::int64_t>(basis_size(4, t) - ideal_dim(f, 4, gens, t)) == expected_hf(3, 5, t));
  }
}

TEST_CASE("ideal_dim when every form decomposes") {
  const PrimeField f;
  Rng rng(3);
  const auto set = random_general_forms(f, 2, 4, rng);
  CHECK(ideal_dim(f, 3, star_generators(set, 2), 2) == 6);
}

TEST_CASE("contains") {
  const PrimeField f;
  Rng rng(4);
  const auto set = random_general_forms(f, 2, 4, rng);
  const auto gens = star_generators(set, 3);

  const auto member = contains(gens, set[0] * set[1] * set[2]);
  REQUIRE(member.has_value());
  CHECK(member->generator_multipliers[0] == MultiPoly<PrimeField>::constant(f, 3, 1));
  for (std::size_t g = 1; g < gens.size(); ++g) CHECK(member->generator_multipliers[g].is_zero());

  // l - r + 1 > n: every form of degree r is a member
  const auto lin = star_generators(set, 2);
  for (int i = 0; i < 10; ++i) CHECK(contains(lin, random_form(f, 3, 2, rng)).has_value());

  // a generic quartic is not in the ideal of 10 points from five lines
  const auto five = random_general_forms(f, 2, 5, rng);
  CHECK_FALSE(contains(star_generators(five, 4), random_form(f, 3, 4, rng)).has_value());

  CHECK_THROWS(contains(gens, random_form(f, 4, 3, rng)));
}

TEST_CASE("contains agrees with ideal_dim") {
  const PrimeField f;
  Rng rng(5);
  for (auto [n, l, r, d] : {std::array{2, 4, 3, 3}, std::array{2, 4, 2, 3}, std::array{3, 5, 3, 4}, std::array{3, 6, 3, 3}}) {
    const auto set = random_general_forms(f, n, l, rng);
    const auto gens = star_generators(set, r);
    const bool full = ideal_dim(f, n + 1, gens, d) == basis_size(n + 1, d);
    for (int i = 0; i < 5; ++i) CHECK(contains(gens, random_form(f, n + 1, d, rng)).has_value() == full);
  }
}

TEST_CASE("decompose round trip") {
  const PrimeField f;
  const RationalField q;
  Rng rng(6);
  for (int n = 2; n <= 3; ++n) {
    for (int d = 3; d <= 5; ++d) {
      const auto set = random_general_forms(f, n, n + 2, rng);
      Decomposition<PrimeField> planted{set.forms, 3, k_subsets(n + 2, 3), {}};
      for (std::size_t s = 0; s < planted.sigmas.size(); ++s) planted.m.push_back(random_form(f, n + 1, d - 3, rng));
      const auto F = planted.reconstruct();
      const auto dec = decompose(F, set.forms, 3);
      REQUIRE(dec.has_value());
      CHECK(dec->reconstruct() == F);
      for (const auto& m : dec->m) CHECK(m.degree() == d - 3);
    }
  }
  const auto qs = random_general_forms(q, 2, 4, rng);
  Decomposition<RationalField> planted{qs.forms, 2, k_subsets(4, 2), {}};
  for (std::size_t s = 0; s < planted.sigmas.size(); ++s) planted.m.push_back(random_form(q, 3, 1, rng));
  const auto F = planted.reconstruct();
  const auto dec = decompose(F, qs.forms, 2);
  REQUIRE(dec.has_value());
  CHECK(dec->reconstruct() == F);

  // deterministic: same input gives the same M
  const auto again = decompose(F, qs.forms, 2);
  CHECK(again->m == dec->m);
}

TEST_CASE("decompose errors and the binary-form factor case") {
  const RationalField q;
  Rng rng(7);
  const auto set = random_general_forms(q, 2, 4, rng);
  CHECK_THROWS_AS(decompose(random_form(q, 3, 2, rng), set.forms, 3), std::invalid_argument);

  // F = L1 L2 L3 L4 L5 on P^1; forms = the first three factors
  std::vector<MultiPoly<RationalField>> factors;
  for (const char* s : {"x0 + x1", "x0 - 2*x1", "3*x0 + x1", "x0 + 5*x1", "2*x0 - 7*x1"}) factors.push_back(parse_poly(q, s, 2, 1));
  MultiPoly<RationalField> F = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) F = F * factors[i];
  const std::vector<MultiPoly<RationalField>> firsts(factors.begin(), factors.begin() + 3);
  const auto dec = decompose(F, firsts, 3);
  REQUIRE(dec.has_value());
  REQUIRE(dec->m.size() == 1);
  CHECK(dec->m[0] == factors[3] * factors[4]);

  // not decomposable: x0^2 against forms x1 and x0 + x1 with r = 2 on P^1
  const std::vector<MultiPoly<RationalField>> two{parse_poly(q, "x1", 2, 1), parse_poly(q, "x0 + x1", 2, 1)};
  CHECK_FALSE(decompose(parse_poly(q, "x0^2", 2), two, 2).has_value());
}
