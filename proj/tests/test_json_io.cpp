#include <gtest/gtest.h>

#include <random>

#include "aslkit/dot.hpp"
#include "aslkit/errors.hpp"
#include "aslkit/json_io.hpp"
#include "oracles.hpp"

using namespace aslkit;
using nlohmann::json;

TEST(JsonIo, PosetRoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + trial % 8, 0.3);
    EXPECT_EQ(poset_from_json(poset_to_json(p)), p);
  }
}

TEST(JsonIo, LoadsDataFiles) {
  const Poset v = load_poset(ASLKIT_TEST_DATA "/v.json");
  EXPECT_EQ(v, oracle::v_poset());
  EXPECT_THROW(load_poset(ASLKIT_TEST_DATA "/cycle.json"), CycleDetected);
  EXPECT_THROW(load_poset(ASLKIT_TEST_DATA "/unknown_label.json"), UnknownLabel);
  EXPECT_THROW(load_poset(ASLKIT_TEST_DATA "/malformed.json"), ParseError);
  EXPECT_THROW(load_poset(ASLKIT_TEST_DATA "/does_not_exist.json"), ParseError);
}

TEST(JsonIo, RejectsBadShapes) {
  EXPECT_THROW(poset_from_json(json::array()), ParseError);
  EXPECT_THROW(poset_from_json({{"covers", json::array()}}), ParseError);
  EXPECT_THROW(poset_from_json({{"elements", {"a", 3}}}), ParseError);
  EXPECT_THROW(poset_from_json({{"elements", {"a", "b"}}, {"covers", {{"a"}}}}), ParseError);
}

TEST(JsonIo, RelationsRoundTrip) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    const IdealLattice l(oracle::random_poset(rng, 1 + trial % 6, 0.3));
    for (RealizationKind kind : kRealizationKinds) {
      const auto pm = straightening_relations(l, kind);
      EXPECT_EQ(relations_from_json(l, relations_to_json(l, pm)), pm);
    }
  }
}

TEST(JsonIo, PointsUseExactRationals) {
  const LatticePoint x{{Rational(1, 2), Rational(0), Rational(-3, 4)}};
  const json doc = point_to_json(x);
  EXPECT_EQ(doc, json({"1/2", "0", "-3/4"}));
  EXPECT_EQ(point_from_json(doc), x);
  EXPECT_EQ(point_from_json(json({1, "2/3"})).coords[1], Rational(2, 3));
  EXPECT_THROW(point_from_json(json({1.5})), ParseError);
}

TEST(JsonIo, CertificateRoundTrip) {
  const Poset p = oracle::sum_of_chains({2, 2, 1});
  const auto cert = uniqueness_certificate(IdealLattice(p));
  const json doc = certificate_to_json(p, cert);
  EXPECT_EQ(certificate_from_json(p, doc), cert);
  json wrong = doc;
  wrong["format"] = "other";
  EXPECT_THROW(certificate_from_json(p, wrong), ParseError);
  json bad_label = doc;
  bad_label["steps"][0]["pair"][0] = {"zz"};
  EXPECT_THROW(certificate_from_json(p, bad_label), ParseError);
}

TEST(Dot, HasseAndLattice) {
  const Poset v = oracle::v_poset();
  const std::string h = hasse_dot(v);
  EXPECT_NE(h.find("digraph"), std::string::npos);
  EXPECT_NE(h.find("rankdir=BT"), std::string::npos);
  const std::string l = lattice_dot(IdealLattice(v));
  std::size_t edges = 0;
  for (std::size_t at = l.find("->"); at != std::string::npos; at = l.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, 5U);
}
