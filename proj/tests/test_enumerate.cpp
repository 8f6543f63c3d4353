#include <gtest/gtest.h>

#include <set>

#include "aslkit/enumerate.hpp"
#include "aslkit/errors.hpp"
#include "oracles.hpp"

using namespace aslkit;

TEST(Canonical, IsomorphicPosetsShareAKey) {
  const auto a = canonical_form(build_poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}}));
  const auto b = canonical_form(oracle::v_poset());
  const auto c = canonical_form(oracle::lambda_poset());
  EXPECT_EQ(a.key, b.key);
  EXPECT_NE(a.key, c.key);
  EXPECT_EQ(a.poset.labels(), (std::vector<std::string>{"p1", "p2", "p3"}));
}

TEST(Canonical, RejectsLargePosets) {
  EXPECT_THROW(canonical_form(oracle::antichain(9)), CapacityExceeded);
}

TEST(Generate, KnownCounts) {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63, 318, 2045};
  EXPECT_THROW(generate_posets(0), CapacityExceeded);
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(generate_posets(n).size(), counts[n]) << "n=" << n;
    EXPECT_EQ(known_poset_count(n), counts[n]);
  }
}

TEST(Generate, MatchesNaiveGenerator) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> fast, slow;
    for (const auto& cp : generate_posets(n)) {
      EXPECT_TRUE(fast.insert(oracle::naive_key(cp.poset)).second);
    }
    for (const auto& p : oracle::naive_posets(n)) slow.insert(oracle::naive_key(p));
    EXPECT_EQ(fast, slow) << "n=" << n;
  }
}

TEST(Generate, ThreadsGiveTheSameLevel) {
  const auto one = generate_posets(6, 1);
  const auto four = generate_posets(6, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].key, four[i].key);
}

TEST(Generate, KeysAreCanonical) {
  for (const auto& cp : generate_posets(6)) {
    EXPECT_EQ(canonical_form(cp.poset).key, cp.key);
  }
}

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 0; n < p.size(); ++n) {
    EXPECT_EQ(partition_count(n), p[n]);
    EXPECT_EQ(oracle::brute_partition_count(n), p[n]);
  }
}

TEST(Partitions, MatchSumsOfChains) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t sums = 0;
    for (const auto& cp : generate_posets(n)) sums += is_direct_sum_of_chains(cp.poset);
    EXPECT_EQ(sums, partition_count(n));
  }
}

TEST(Corpus, SmallRunIsClean) {
  const auto report = corpus_verify({.max_n = 5});
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.total_posets(), 87U);
  EXPECT_EQ(report.total_sums_of_chains(), 18U);
  EXPECT_TRUE(report.counterexamples.empty());
  for (const auto& t : report.tallies) {
    EXPECT_EQ(t.condition_ii_holds, t.sums_of_chains);
    EXPECT_EQ(t.certificates_validated, t.sums_of_chains);
    EXPECT_EQ(t.unique_checked, t.posets);
  }
}

TEST(Corpus, ParallelMatchesSerial) {
  const auto a = corpus_verify({.max_n = 6, .threads = 1});
  const auto b = corpus_verify({.max_n = 6, .threads = 3});
  ASSERT_EQ(a.tallies.size(), b.tallies.size());
  for (std::size_t i = 0; i < a.tallies.size(); ++i) {
    EXPECT_EQ(a.tallies[i].posets, b.tallies[i].posets);
    EXPECT_EQ(a.tallies[i].condition_ii_holds, b.tallies[i].condition_ii_holds);
    EXPECT_EQ(a.tallies[i].certificates_validated, b.tallies[i].certificates_validated);
  }
}
