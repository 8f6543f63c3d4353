#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aslkit/poset.hpp"

namespace aslkit {

/// A down-closed subset of a poset.
struct Ideal {
  ElementSet members;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

/// An up-closed subset of a poset.
struct Filter {
  ElementSet members;
  friend auto operator<=>(const Filter&, const Filter&) = default;
};

/// Unordered pair of lattice positions with `first < second`.
struct IdealPair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend auto operator<=>(const IdealPair&, const IdealPair&) = default;
};

/// Birkhoff's lattice I(P): every ideal of a poset, ordered by cardinality and
/// then by the numeric value of the membership mask.
class IdealLattice {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  /// Throws CapacityExceeded when P has more than `capacity` ideals.
  explicit IdealLattice(Poset poset, std::size_t capacity = kDefaultCapacity);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  const Ideal& operator[](std::size_t pos) const { return ideals_[pos]; }

  std::optional<std::size_t> find(ElementSet members) const;
  /// Throws NotAnIdeal when `members` is not down-closed.
  std::size_t position(ElementSet members) const;
  std::size_t position(Ideal ideal) const { return position(ideal.members); }
  /// Validating conversion; throws NotAnIdeal.
  Ideal ideal(ElementSet members) const;

  Ideal bottom() const noexcept { return ideals_.front(); }
  Ideal top() const noexcept { return ideals_.back(); }

 private:
  Poset poset_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t> index_;
};

inline IdealLattice enumerate_ideals(Poset p,
                                     std::size_t capacity = IdealLattice::kDefaultCapacity) {
  return IdealLattice(std::move(p), capacity);
}

inline Ideal meet(Ideal a, Ideal b) noexcept { return Ideal{a.members & b.members}; }
inline Ideal join(Ideal a, Ideal b) noexcept { return Ideal{a.members | b.members}; }
inline bool comparable(Ideal a, Ideal b) noexcept {
  return a.members.is_subset_of(b.members) || b.members.is_subset_of(a.members);
}
inline std::size_t rank(Ideal a) noexcept { return a.members.size(); }

/// max(alpha): an antichain that generates alpha.
ElementSet max_elements(const Poset& p, Ideal alpha);
/// Down-closure of an antichain; throws NotAntichain.
Ideal ideal_from_antichain(const Poset& p, ElementSet antichain);
/// P minus alpha.
Filter complement_filter(const Poset& p, Ideal alpha);
Ideal complement_ideal(const Poset& p, Filter f);
ElementSet min_elements(const Poset& p, Filter f);

/// Ideal generated by max(a & b) & (max a | max b).
Ideal star(const Poset& p, Ideal a, Ideal b);
/// P minus the filter generated by min(~a & ~b) & (min ~a | min ~b).
Ideal circ(const Poset& p, Ideal a, Ideal b);

/// All incomparable pairs, lexicographic in (first, second) position.
std::vector<IdealPair> incomparable_ideal_pairs(const IdealLattice& lattice);

/// Positions of ideals that cover exactly one ideal.
std::vector<std::size_t> join_irreducibles(const IdealLattice& lattice);

}  // namespace aslkit
