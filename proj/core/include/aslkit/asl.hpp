#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aslkit/lattice.hpp"
#include "aslkit/monomial.hpp"

namespace aslkit {

/// The three canonical generator maps from I(P) to monomials:
///   Order     alpha -> u_alpha * t
///   Chain     alpha -> u_{max alpha} * t
///   ChainDual alpha -> u_{min(P \ alpha)} * t
enum class RealizationKind { Order, Chain, ChainDual };

inline constexpr std::array<RealizationKind, 3> kRealizationKinds = {
    RealizationKind::Order, RealizationKind::Chain, RealizationKind::ChainDual};

/// "order", "chain", "chain-dual"
std::string_view to_string(RealizationKind kind) noexcept;
/// Inverse of to_string; throws ParseError.
RealizationKind parse_realization_kind(std::string_view name);

/// Generator monomial of `alpha` over x_1..x_n, t.
Monomial realize(const Poset& p, RealizationKind kind, Ideal alpha);

/// A binomial straightening relation  w(alpha) w(alpha') = w(beta) w(beta').
struct CompatibleRelation {
  Ideal alpha;
  Ideal alpha_prime;
  Ideal beta;
  Ideal beta_prime;
  friend bool operator==(const CompatibleRelation&, const CompatibleRelation&) = default;
};

/// alpha, alpha' incomparable; beta <= alpha & alpha'; beta' >= alpha | alpha'.
bool has_compatible_shape(const CompatibleRelation& r) noexcept;

/// One straightening relation per incomparable pair of I(P).
///
/// Two pair maps compare equal when they assign the same right-hand side to
/// every unordered pair, regardless of storage order or orientation.
class PairMap {
 public:
  PairMap() = default;
  explicit PairMap(std::vector<CompatibleRelation> relations);

  const std::vector<CompatibleRelation>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }

  /// Relation for the unordered pair {a, b}, or nullptr.
  const CompatibleRelation* find(Ideal a, Ideal b) const;

  friend bool operator==(const PairMap& a, const PairMap& b);

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  static std::pair<std::uint64_t, std::uint64_t> key(Ideal a, Ideal b) noexcept;

  std::vector<CompatibleRelation> relations_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, KeyHash> index_;
};

/// Order:     (a & b, a | b)
/// Chain:     (a * b, a | b)
/// ChainDual: (a & b, a o b)
/// Entries follow incomparable_ideal_pairs order.
PairMap straightening_relations(const IdealLattice& lattice, RealizationKind kind);

/// The first pair (in the lattice's pair order) where two pair maps disagree.
struct RelationDifference {
  Ideal alpha;
  Ideal alpha_prime;
  CompatibleRelation first;
  CompatibleRelation second;
};

struct RelationComparison {
  bool equal = true;
  std::optional<RelationDifference> witness;
};

/// Compares two pair maps over the incomparable pairs of `lattice`.
/// A pair missing from either map counts as a difference.
RelationComparison compare_pair_maps(const IdealLattice& lattice, const PairMap& a,
                                     const PairMap& b);

RelationComparison relations_equal(const IdealLattice& lattice, RealizationKind a,
                                   RealizationKind b);

struct KindComparison {
  RealizationKind first;
  RealizationKind second;
  RelationComparison result;
};

/// Whether the order, chain and dual-chain relation systems coincide. The
/// comparisons are reported in (Order, Chain), (Order, ChainDual),
/// (Chain, ChainDual) order.
struct ConditionIIReport {
  bool holds = true;
  std::array<KindComparison, 3> comparisons;
};

ConditionIIReport check_condition_ii(const IdealLattice& lattice);

/// Maps a relation table of dual(P) back to I(P) by complementing every ideal
/// (ideals of the dual are the filters of P). Pairs are matched by labels.
PairMap transport_from_dual(const IdealLattice& lattice, const IdealLattice& dual_lattice,
                            const PairMap& dual_relations);

}  // namespace aslkit
