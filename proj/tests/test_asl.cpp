#include <gtest/gtest.h>

#include <random>
#include <set>

#include "aslkit/asl.hpp"
#include "aslkit/errors.hpp"
#include "aslkit/monomial.hpp"
#include "oracles.hpp"

using namespace aslkit;

namespace {

Ideal ideal(const Poset& p, std::vector<std::string> names) {
  return Ideal{p.labels_to_set(names)};
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST(Monomial, SubsetMonomials) {
  EXPECT_EQ(monomial_of_subset(3, ElementSet{}), mono({0, 0, 0, 0}));
  EXPECT_EQ(monomial_of_subset(3, ElementSet{0b101}), mono({1, 0, 1, 0}));
  EXPECT_EQ(monomial_of_subset(3, ElementSet::full(3)), mono({1, 1, 1, 0}));
  const std::vector<std::string> names{"p", "q", "r"};
  EXPECT_EQ(to_string(monomial_of_subset(3, ElementSet{}), names), "1");
  EXPECT_EQ(to_string(times_t(monomial_of_subset(3, ElementSet{0b011})), names), "x_p*x_q*t");
  EXPECT_EQ(mono({1, 2, 1}) * mono({0, 1, 1}), mono({1, 3, 2}));
}

TEST(Realize, CanonicalGenerators) {
  const Poset v = oracle::v_poset();  // p, p', q
  EXPECT_EQ(realize(v, RealizationKind::Order, ideal(v, {"p", "p'"})), mono({1, 1, 0, 1}));
  EXPECT_EQ(realize(v, RealizationKind::Chain, Ideal{v.all()}), mono({0, 0, 1, 1}));
  EXPECT_EQ(realize(v, RealizationKind::ChainDual, Ideal{v.all()}), mono({0, 0, 0, 1}));
  EXPECT_EQ(realize(v, RealizationKind::ChainDual, ideal(v, {"p"})), mono({0, 1, 0, 1}));
}

TEST(Realize, KindNames) {
  for (RealizationKind k : kRealizationKinds) EXPECT_EQ(parse_realization_kind(to_string(k)), k);
  EXPECT_THROW(parse_realization_kind("hibi"), ParseError);
}

TEST(Relations, VPoset) {
  const Poset v = oracle::v_poset();
  const IdealLattice l(v);
  const auto order = straightening_relations(l, RealizationKind::Order);
  ASSERT_EQ(order.size(), 1U);
  const auto* r = order.find(ideal(v, {"p"}), ideal(v, {"p'"}));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->beta, ideal(v, {}));
  EXPECT_EQ(r->beta_prime, ideal(v, {"p", "p'"}));
  const auto dualchain = straightening_relations(l, RealizationKind::ChainDual);
  const auto* d = dualchain.find(ideal(v, {"p'"}), ideal(v, {"p"}));
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->beta, ideal(v, {}));
  EXPECT_EQ(d->beta_prime, Ideal{v.all()});
}

TEST(Relations, LambdaChain) {
  const Poset l = oracle::lambda_poset();
  const IdealLattice lat(l);
  const auto chain = straightening_relations(lat, RealizationKind::Chain);
  const auto* r = chain.find(ideal(l, {"q", "p"}), ideal(l, {"q", "p'"}));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->beta, ideal(l, {}));
  EXPECT_EQ(r->beta_prime, Ideal{l.all()});
}

TEST(Relations, Equality) {
  const IdealLattice s(oracle::sum_of_chains({2, 1}));
  EXPECT_TRUE(relations_equal(s, RealizationKind::Order, RealizationKind::Chain).equal);

  const Poset v = oracle::v_poset();
  const IdealLattice lv(v);
  const auto cmp = relations_equal(lv, RealizationKind::Order, RealizationKind::ChainDual);
  ASSERT_FALSE(cmp.equal);
  ASSERT_TRUE(cmp.witness);
  EXPECT_EQ((std::set<Ideal>{cmp.witness->alpha, cmp.witness->alpha_prime}),
            (std::set<Ideal>{ideal(v, {"p"}), ideal(v, {"p'"})}));
  EXPECT_EQ(cmp.witness->first.beta_prime, ideal(v, {"p", "p'"}));
  EXPECT_EQ(cmp.witness->second.beta_prime, Ideal{v.all()});

  const Poset l = oracle::lambda_poset();
  const IdealLattice ll(l);
  const auto lc = relations_equal(ll, RealizationKind::Order, RealizationKind::Chain);
  ASSERT_FALSE(lc.equal);
  EXPECT_EQ(lc.witness->first.beta, ideal(l, {"q"}));
  EXPECT_EQ(lc.witness->second.beta, ideal(l, {}));
}

TEST(Relations, ComparisonReportsMissingPairs) {
  const IdealLattice l(oracle::antichain(2));
  const auto full = straightening_relations(l, RealizationKind::Order);
  const auto cmp = compare_pair_maps(l, full, PairMap{});
  EXPECT_FALSE(cmp.equal);
}

TEST(ConditionII, Examples) {
  EXPECT_TRUE(check_condition_ii(IdealLattice(oracle::antichain(3))).holds);
  EXPECT_TRUE(check_condition_ii(IdealLattice(oracle::chain(5))).holds);
  const auto v = check_condition_ii(IdealLattice(oracle::v_poset()));
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(v.comparisons[0].result.equal);
  EXPECT_FALSE(v.comparisons[1].result.equal);
  EXPECT_EQ(v.comparisons[1].first, RealizationKind::Order);
  EXPECT_EQ(v.comparisons[1].second, RealizationKind::ChainDual);
}

TEST(RelationsProperty, ToricIdentitiesAndShape) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 8, 0.3);
    const IdealLattice l(p);
    const std::size_t pairs = incomparable_ideal_pairs(l).size();
    for (RealizationKind kind : kRealizationKinds) {
      const auto pm = straightening_relations(l, kind);
      ASSERT_EQ(pm.size(), pairs);
      for (const auto& r : pm.relations()) {
        EXPECT_TRUE(has_compatible_shape(r));
        EXPECT_TRUE(l.find(r.beta.members) && l.find(r.beta_prime.members));
        EXPECT_EQ(realize(p, kind, r.alpha) * realize(p, kind, r.alpha_prime),
                  realize(p, kind, r.beta) * realize(p, kind, r.beta_prime));
      }
    }
  }
}

TEST(RelationsProperty, DualTransportMatchesChainDual) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 7, 0.35);
    const IdealLattice l(p);
    const IdealLattice d(dual(p));
    const auto moved = transport_from_dual(l, d, straightening_relations(d, RealizationKind::Chain));
    EXPECT_EQ(moved, straightening_relations(l, RealizationKind::ChainDual));
  }
}

TEST(RelationsProperty, ConditionIIIffSumOfChains) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 8, 0.2);
    const IdealLattice l(p);
    EXPECT_EQ(check_condition_ii(l).holds, is_direct_sum_of_chains(p));
  }
}
