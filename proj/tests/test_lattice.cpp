#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "aslkit/errors.hpp"
#include "aslkit/lattice.hpp"
#include "oracles.hpp"

using namespace aslkit;

namespace {

Ideal ideal(const Poset& p, std::vector<std::string> names) {
  return Ideal{p.labels_to_set(names)};
}

}  // namespace

TEST(Lattice, IdealCounts) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(IdealLattice(oracle::chain(n)).size(), n + 1);
    EXPECT_EQ(IdealLattice(oracle::antichain(n)).size(), std::size_t{1} << n);
  }
}

TEST(Lattice, VPosetHasFiveIdeals) {
  const Poset v = oracle::v_poset();
  const IdealLattice l(v);
  ASSERT_EQ(l.size(), 5U);
  std::vector<Ideal> expected{ideal(v, {}), ideal(v, {"p"}), ideal(v, {"p'"}),
                              ideal(v, {"p", "p'"}), ideal(v, {"p", "p'", "q"})};
  for (const Ideal& e : expected) EXPECT_TRUE(l.find(e.members).has_value());
  EXPECT_EQ(l.bottom(), ideal(v, {}));
  EXPECT_EQ(l.top(), ideal(v, {"p", "p'", "q"}));
}

TEST(Lattice, NonIdealIsRejected) {
  const Poset v = oracle::v_poset();
  const IdealLattice l(v);
  EXPECT_THROW(l.position(v.labels_to_set({"q"})), NotAnIdeal);
  EXPECT_THROW(IdealLattice(oracle::antichain(12), 100), CapacityExceeded);
}

TEST(Lattice, MeetAndJoin) {
  const Poset v = oracle::v_poset();
  const Ideal p = ideal(v, {"p"}), pp = ideal(v, {"p'"});
  EXPECT_EQ(meet(p, pp), ideal(v, {}));
  EXPECT_EQ(join(p, pp), ideal(v, {"p", "p'"}));
  EXPECT_EQ(meet(p, p), p);
  EXPECT_EQ(join(p, p), p);
}

TEST(Lattice, MaxElementsAndAntichainIdeals) {
  const Poset v = oracle::v_poset();
  EXPECT_EQ(max_elements(v, ideal(v, {"p", "p'", "q"})), v.labels_to_set({"q"}));
  EXPECT_TRUE(max_elements(v, ideal(v, {})).empty());
  const Poset a = oracle::antichain(3);
  const IdealLattice la(a);
  for (const Ideal& i : la.ideals()) EXPECT_EQ(max_elements(a, i), i.members);
  EXPECT_EQ(ideal_from_antichain(v, v.labels_to_set({"q"})), ideal(v, {"p", "p'", "q"}));
  EXPECT_EQ(ideal_from_antichain(v, ElementSet{}), ideal(v, {}));
  EXPECT_EQ(ideal_from_antichain(v, v.labels_to_set({"p", "p'"})), ideal(v, {"p", "p'"}));
  EXPECT_THROW(ideal_from_antichain(v, v.labels_to_set({"p", "q"})), NotAntichain);
}

TEST(Lattice, ComplementFilters) {
  const Poset v = oracle::v_poset();
  const Filter f = complement_filter(v, ideal(v, {"p"}));
  EXPECT_EQ(f.members, v.labels_to_set({"p'", "q"}));
  EXPECT_EQ(min_elements(v, f), v.labels_to_set({"p'"}));
  EXPECT_TRUE(complement_filter(v, Ideal{v.all()}).members.empty());
  const Poset l = oracle::lambda_poset();
  const Filter up{l.labels_to_set({"p", "p'"})};
  EXPECT_EQ(min_elements(l, up), l.labels_to_set({"p", "p'"}));
  EXPECT_EQ(complement_ideal(l, up), ideal(l, {"q"}));
}

TEST(Lattice, StarExamples) {
  const Poset l = oracle::lambda_poset();
  EXPECT_EQ(star(l, ideal(l, {"q", "p"}), ideal(l, {"q", "p'"})), ideal(l, {}));
  const Poset v = oracle::v_poset();
  EXPECT_EQ(star(v, ideal(v, {"p"}), ideal(v, {"p'"})), ideal(v, {}));
  EXPECT_EQ(star(v, ideal(v, {"p"}), ideal(v, {"p", "p'"})), ideal(v, {"p"}));
}

TEST(Lattice, CircExamples) {
  const Poset v = oracle::v_poset();
  EXPECT_EQ(circ(v, ideal(v, {"p"}), ideal(v, {"p'"})), Ideal{v.all()});
  const Poset l = oracle::lambda_poset();
  EXPECT_EQ(circ(l, ideal(l, {"q", "p"}), ideal(l, {"q", "p'"})), Ideal{l.all()});
  EXPECT_EQ(circ(v, ideal(v, {"p"}), ideal(v, {"p", "p'"})), ideal(v, {"p", "p'"}));
}

TEST(Lattice, Rank) {
  const Poset v = oracle::v_poset();
  EXPECT_EQ(rank(ideal(v, {})), 0U);
  EXPECT_EQ(rank(Ideal{v.all()}), 3U);
  EXPECT_EQ(rank(ideal(v, {"p", "p'"})), 2U);
}

TEST(Lattice, IncomparablePairs) {
  EXPECT_TRUE(incomparable_ideal_pairs(IdealLattice(oracle::chain(4))).empty());
  const Poset v = oracle::v_poset();
  const IdealLattice lv(v);
  const auto pairs = incomparable_ideal_pairs(lv);
  ASSERT_EQ(pairs.size(), 1U);
  const std::set<Ideal> got{lv[pairs[0].first], lv[pairs[0].second]};
  EXPECT_EQ(got, (std::set<Ideal>{ideal(v, {"p"}), ideal(v, {"p'"})}));
  EXPECT_EQ(incomparable_ideal_pairs(IdealLattice(oracle::antichain(2))).size(), 1U);
}

TEST(LatticeProperty, IdealsMatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 9, 0.3);
    const IdealLattice l(p);
    std::vector<ElementSet> got;
    for (const Ideal& i : l.ideals()) got.push_back(i.members);
    auto want = oracle::brute_ideals(p);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(l.size(), oracle::brute_antichain_count(p));
    for (std::size_t k = 1; k < l.size(); ++k) EXPECT_LE(rank(l[k - 1]), rank(l[k]));
  }
}

TEST(LatticeProperty, MeetAndJoinAreClosedAndBounded) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 7, 0.3);
    const IdealLattice l(p);
    for (const Ideal& a : l.ideals()) {
      for (const Ideal& b : l.ideals()) {
        const Ideal m = meet(a, b), j = join(a, b);
        ASSERT_TRUE(l.find(m.members));
        ASSERT_TRUE(l.find(j.members));
        EXPECT_EQ(meet(a, j), a);
        EXPECT_EQ(join(a, m), a);
        EXPECT_EQ(comparable(a, b), a.members.is_subset_of(b.members) ||
                                        b.members.is_subset_of(a.members));
      }
    }
  }
}

TEST(LatticeProperty, StarAndCircMatchDefinitions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 7, 0.35);
    const IdealLattice l(p);
    for (const Ideal& a : l.ideals()) {
      for (const Ideal& b : l.ideals()) {
        const Ideal s = star(p, a, b), c = circ(p, a, b);
        EXPECT_EQ(s.members, oracle::brute_star(p, a.members, b.members));
        EXPECT_EQ(c.members, oracle::brute_circ(p, a.members, b.members));
        EXPECT_TRUE(s.members.is_subset_of(meet(a, b).members));
        EXPECT_TRUE(join(a, b).members.is_subset_of(c.members));
        if (a.members.is_subset_of(b.members)) {
          EXPECT_EQ(s, a);
          EXPECT_EQ(c, b);
        }
      }
    }
  }
}

TEST(LatticeProperty, JoinIrreduciblesRecoverThePoset) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 7, 0.35);
    const IdealLattice l(p);
    const auto ji = join_irreducibles(l);
    ASSERT_EQ(ji.size(), p.size());
    // Each join-irreducible is the principal ideal of its unique maximum.
    std::vector<std::uint32_t> rows(ji.size(), 0);
    for (std::size_t a = 0; a < ji.size(); ++a) {
      for (std::size_t b = 0; b < ji.size(); ++b) {
        if (a != b && l[ji[a]].members.is_proper_subset_of(l[ji[b]].members)) rows[a] |= 1U << b;
      }
    }
    EXPECT_EQ(oracle::naive_key(rows), oracle::naive_key(p));
  }
}
