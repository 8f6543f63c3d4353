#include <gtest/gtest.h>

#include <random>

#include "aslkit/errors.hpp"
#include "aslkit/poset.hpp"
#include "oracles.hpp"

using namespace aslkit;

namespace {

ElementSet labels(const Poset& p, std::vector<std::string> names) { return p.labels_to_set(names); }

}  // namespace

TEST(Poset, SingletonHasOnlyReflexivePair) {
  const Poset p = build_poset({"a"}, {});
  ASSERT_EQ(p.size(), 1U);
  EXPECT_TRUE(p.leq(0, 0));
  EXPECT_FALSE(p.less(0, 0));
  EXPECT_TRUE(p.covers().empty());
}

TEST(Poset, VPosetOrder) {
  const Poset p = oracle::v_poset();
  const auto i = [&](const char* l) { return *p.index_of(l); };
  EXPECT_TRUE(p.less(i("p"), i("q")));
  EXPECT_TRUE(p.less(i("p'"), i("q")));
  EXPECT_FALSE(p.comparable(i("p"), i("p'")));
  EXPECT_EQ(p.covers().size(), 2U);
}

TEST(Poset, CycleIsRejected) {
  EXPECT_THROW(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleDetected);
  EXPECT_THROW(build_poset({"a"}, {{"a", "a"}}), CycleDetected);
}

TEST(Poset, BadInputIsRejected) {
  EXPECT_THROW(build_poset({"a", "a"}, {}), DuplicateLabel);
  EXPECT_THROW(build_poset({"a", "b"}, {{"a", "z"}}), UnknownLabel);
  std::vector<std::string> many;
  for (int k = 0; k < 65; ++k) many.push_back("x" + std::to_string(k));
  EXPECT_THROW(build_poset(many, {}), CapacityExceeded);
}

TEST(Poset, RedundantCoversAreReduced) {
  const Poset p = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(p.covers().size(), 2U);
  EXPECT_TRUE(p.less(*p.index_of("a"), *p.index_of("c")));
}

TEST(Poset, IndicesFollowALinearExtension) {
  const Poset p = build_poset({"top", "mid", "bot"}, {{"mid", "top"}, {"bot", "mid"}});
  EXPECT_EQ(p.label(0), "bot");
  EXPECT_EQ(p.label(1), "mid");
  EXPECT_EQ(p.label(2), "top");
}

TEST(Poset, DualOfChainReversesIt) {
  const Poset d = dual(oracle::chain(3));
  EXPECT_TRUE(d.less(*d.index_of("c3"), *d.index_of("c1")));
  EXPECT_EQ(d.label(0), "c3");
}

TEST(Poset, DualOfVIsLambda) {
  const Poset d = dual(oracle::v_poset());
  EXPECT_EQ(oracle::naive_key(d), oracle::naive_key(oracle::lambda_poset()));
  EXPECT_EQ(d.minimal(d.all()), labels(d, {"q"}));
}

TEST(Poset, AntichainIsSelfDual) {
  const Poset a = oracle::antichain(3);
  EXPECT_EQ(dual(a), a);
}

TEST(Poset, ConnectedComponents) {
  EXPECT_EQ(connected_components(oracle::antichain(3)).size(), 3U);
  EXPECT_EQ(connected_components(oracle::v_poset()).size(), 1U);
  const auto comps = connected_components(oracle::sum_of_chains({2, 1}));
  ASSERT_EQ(comps.size(), 2U);
  std::vector<std::size_t> sizes{comps[0].size(), comps[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2}));
}

TEST(Poset, SumOfChains) {
  EXPECT_TRUE(is_direct_sum_of_chains(oracle::chain(4)));
  EXPECT_FALSE(is_direct_sum_of_chains(oracle::v_poset()));
  EXPECT_FALSE(is_direct_sum_of_chains(oracle::lambda_poset()));
  EXPECT_TRUE(is_direct_sum_of_chains(oracle::sum_of_chains({2, 3})));
  EXPECT_TRUE(is_direct_sum_of_chains(oracle::antichain(5)));
}

TEST(Poset, MaximalChains) {
  EXPECT_EQ(maximal_chains(oracle::chain(3)).size(), 1U);
  EXPECT_EQ(maximal_chains(oracle::chain(3))[0].elements.size(), 3U);
  const Poset v = oracle::v_poset();
  const auto chains = maximal_chains(v);
  ASSERT_EQ(chains.size(), 2U);
  for (const auto& c : chains) {
    ASSERT_EQ(c.elements.size(), 2U);
    EXPECT_EQ(v.label(c.elements[1]), "q");
  }
  const auto anti = maximal_chains(oracle::antichain(2));
  ASSERT_EQ(anti.size(), 2U);
  EXPECT_EQ(anti[0].elements.size(), 1U);
}

TEST(Poset, ClosuresAndExtremes) {
  const Poset v = oracle::v_poset();
  EXPECT_EQ(v.down_closure(labels(v, {"q"})), v.all());
  EXPECT_EQ(v.up_closure(labels(v, {"p"})), labels(v, {"p", "q"}));
  EXPECT_TRUE(v.is_antichain(labels(v, {"p", "p'"})));
  EXPECT_FALSE(v.is_antichain(labels(v, {"p", "q"})));
  EXPECT_EQ(v.maximal(v.all()), labels(v, {"q"}));
  EXPECT_EQ(v.minimal(v.all()), labels(v, {"p", "p'"}));
}

TEST(PosetProperty, ClosureAndReductionRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Poset p = oracle::random_poset(rng, n, 0.35);
    // Rebuilding from the cover list reproduces the order.
    std::vector<IndexCover> covers = p.covers();
    const Poset q = Poset::from_covers(p.labels(), covers);
    EXPECT_EQ(p, q);
    // Rebuilding from the full order reproduces the covers.
    std::vector<IndexCover> all;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.less(i, j)) all.emplace_back(i, j);
      }
    }
    EXPECT_EQ(Poset::from_covers(p.labels(), all).covers(), p.covers());
    for (const auto& [lo, hi] : p.covers()) EXPECT_LT(lo, hi);
  }
}

TEST(PosetProperty, DualIsAnInvolution) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 8, 0.4);
    const Poset d = dual(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_EQ(p.leq(i, j), d.leq(*d.index_of(p.label(j)), *d.index_of(p.label(i))));
      }
    }
    EXPECT_EQ(oracle::naive_key(dual(d)), oracle::naive_key(p));
  }
}

TEST(PosetProperty, SumOfChainsMatchesComponentwiseTotality) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 7, 0.25);
    bool expected = true;
    for (ElementSet comp : connected_components(p)) {
      comp.for_each([&](ElementIndex i) {
        comp.for_each([&](ElementIndex j) { expected = expected && p.comparable(i, j); });
      });
    }
    EXPECT_EQ(is_direct_sum_of_chains(p), expected);
  }
}
