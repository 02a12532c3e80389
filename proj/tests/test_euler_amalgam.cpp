#include <doctest.h>

#include <random>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/euler_amalgam.hpp"
#include "comkit/generation.hpp"
#include "comkit/minors.hpp"
#include "comkit/ranking.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace comkit;

TEST_CASE("decomposition along a pivot") {
  CHECK(!decompose(ranking_com(fixtures::antichain3())).has_value());
  CHECK(!decompose(SignSystem::from_strings({"+-"})).has_value());
  CHECK_THROWS_AS(decompose(fixtures::se_counterexample()), PreconditionError);
  CHECK_THROWS_AS(decompose(fixtures::plus_zero_zero()), PreconditionError);

  const auto fig = fixtures::five_lines();
  const auto d = decompose(fig);
  REQUIRE(d.has_value());
  CHECK(d->x[d->pivot] == d->side);
  CHECK(d->y[d->pivot] == 0);
  CHECK(intersect(d->lower, d->upper) == d->overlap);
  CHECK(unite(d->lower, d->upper) == fig);
  CHECK(decompose(ranking_com(fixtures::fence5())).has_value());
}

TEST_CASE("amalgam conditions hold for every decomposition") {
  for (const auto& [name, s] : fixtures::com_corpus()) {
    CAPTURE(name);
    if (!classify(s).is_semisimple) continue;
    const auto d = decompose(s);
    if (!d) {
      CHECK(minimal_elements(s).size() == 1);
      continue;
    }
    CHECK(minimal_elements(s).size() > 1);
    const auto r = verify_amalgam(d->lower, d->upper, s);
    CHECK(r.holds());
    CHECK(r.parts_semisimple_coms);
    CHECK(amalgamate(d->lower, d->upper) == s);

    const auto self = verify_amalgam(d->upper, d->upper, d->upper);
    CHECK(!self.cond1);
    CHECK(!self.holds());
    CHECK_THROWS_AS(amalgamate(d->upper, d->upper), AmalgamError);

    const auto tree = decompose_fully(s);
    CHECK(reassemble(tree) == s);
    for (const auto& leaf : leaves(tree)) {
      const auto mins = minimal_elements(leaf);
      REQUIRE(mins.size() == 1);
      CHECK(classify(delete_elements(leaf, mins[0].support())).is_om);
    }
  }
}

TEST_CASE("amalgam failure reports the first violated condition") {
  const auto a = SignSystem::from_strings({"++", "+-"});
  const auto b = SignSystem::from_strings({"-+", "--"});
  try {
    amalgamate(a, b);
    FAIL("expected AmalgamError");
  } catch (const AmalgamError& e) {
    CHECK(!e.report().cond1);
    CHECK(!e.report().failure.empty());
  }
  CHECK_THROWS_AS(verify_amalgam(a, SignSystem::from_strings({"+"}), a), DimensionError);
}

TEST_CASE("ranks") {
  const auto hex = ranking_com(fixtures::antichain3());
  CHECK(rank(hex, SignVector::parse("000")) == 2);
  CHECK_THROWS_AS(rank(hex, SignVector::parse("+-+")), MembershipError);
  CHECK_THROWS_AS(rank(fixtures::fs_counterexample(), SignVector::parse("00")), PreconditionError);

  for (const auto& [name, s] : fixtures::com_corpus()) {
    CAPTURE(name);
    const auto table = rank_table(s);
    const bool lopsided = classify(s).is_lopsided;
    const ElementSet active = non_constant_elements(s);
    for (std::size_t i = 0; i < table.covectors.size(); ++i) {
      const auto& x = table.covectors[i];
      if (x.full_support()) CHECK(table.rank[i] == 0);
      if (lopsided) CHECK(table.rank[i] == (x.zeros() & active).count());
    }
  }
}

TEST_CASE("Euler-Poincare sums") {
  for (const auto& [name, s] : fixtures::com_corpus()) {
    CAPTURE(name);
    CHECK(euler_poincare(s) == 1);
    if (!classify(s).is_semisimple) continue;
    if (const auto d = decompose(s))
      CHECK(euler_poincare(s) ==
            euler_poincare(d->lower) + euler_poincare(d->upper) - euler_poincare(d->overlap));
  }
  CHECK(euler_zero_sets(fixtures::path_system()) == 1);
  CHECK(euler_zero_sets(fixtures::plus_zero_zero()) == 1);
  CHECK(euler_zero_sets(SignSystem::from_strings({"+", "-"})) == 2);
  CHECK_THROWS_AS(euler_poincare(fixtures::path_system()), PreconditionError);
}

TEST_CASE("lopsidedness via Euler sums") {
  CHECK(!lopsided_by_euler(fixtures::path_system(), EulerVariant::TOPAL_FIBERS));
  CHECK(!lopsided_by_euler(fixtures::path_system(), EulerVariant::CONTRACTIONS));
  CHECK(!lopsided_by_euler(fixtures::plus_zero_zero(), EulerVariant::CONTRACTIONS));
  CHECK(!lopsided_by_euler(fixtures::plus_zero_zero(), EulerVariant::TOPAL_FIBERS));
  for (const auto& [name, s] : fixtures::all_systems()) {
    CAPTURE(name);
    if (s.num_elements() > 8) continue;
    const bool lop = classify(s).is_lopsided;
    CHECK(lopsided_by_euler(s, EulerVariant::TOPAL_FIBERS) == lop);
    CHECK(lopsided_by_euler(s, EulerVariant::CONTRACTIONS) == lop);
  }
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = oracle::random_system(rng, 1 + trial % 3, 1 + rng() % 20);
    const auto s = oracle::to_system(rows);
    const bool lop = oracle::is_lopsided(rows);
    CHECK(lopsided_by_euler(s, EulerVariant::TOPAL_FIBERS) == lop);
    CHECK(lopsided_by_euler(s, EulerVariant::CONTRACTIONS) == lop);
  }
  Limits tight;
  tight.max_elements = 2;
  CHECK_THROWS_AS(lopsided_by_euler(fixtures::five_lines(), EulerVariant::CONTRACTIONS, tight), GuardError);
}
