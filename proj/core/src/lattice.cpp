#include "aslkit/lattice.hpp"

#include <algorithm>

#include "aslkit/errors.hpp"

namespace aslkit {

IdealLattice::IdealLattice(Poset poset, std::size_t capacity) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  // Elements are visited in linear-extension order, so every lower cover of i
  // has already been decided when i is reached.
  auto visit = [&](auto&& self, ElementIndex i, ElementSet current) -> void {
    if (i == n) {
      if (ideals_.size() >= capacity) {
        throw CapacityExceeded("poset has more than " + std::to_string(capacity) + " ideals");
      }
      ideals_.push_back(Ideal{current});
      return;
    }
    self(self, i + 1, current);
    if (poset_.lower_covers(i).is_subset_of(current)) self(self, i + 1, current.with(i));
  };
  visit(visit, 0, ElementSet{});

  std::sort(ideals_.begin(), ideals_.end(), [](Ideal a, Ideal b) {
    const auto sa = a.members.size(), sb = b.members.size();
    if (sa != sb) return sa < sb;
    return a.members.bits() < b.members.bits();
  });
  index_.reserve(ideals_.size());
  for (std::size_t k = 0; k < ideals_.size(); ++k) index_.emplace(ideals_[k].members, k);
}

std::optional<std::size_t> IdealLattice::find(ElementSet members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::position(ElementSet members) const {
  if (auto pos = find(members)) return *pos;
  throw NotAnIdeal("subset is not a poset ideal");
}

Ideal IdealLattice::ideal(ElementSet members) const { return ideals_[position(members)]; }

ElementSet max_elements(const Poset& p, Ideal alpha) { return p.maximal(alpha.members); }

Ideal ideal_from_antichain(const Poset& p, ElementSet antichain) {
  if (!p.is_antichain(antichain)) throw NotAntichain("generator set contains comparable elements");
  return Ideal{p.down_closure(antichain)};
}

Filter complement_filter(const Poset& p, Ideal alpha) { return Filter{p.all() - alpha.members}; }

Ideal complement_ideal(const Poset& p, Filter f) { return Ideal{p.all() - f.members}; }

ElementSet min_elements(const Poset& p, Filter f) { return p.minimal(f.members); }

Ideal star(const Poset& p, Ideal a, Ideal b) {
  const ElementSet generators =
      p.maximal(a.members & b.members) & (p.maximal(a.members) | p.maximal(b.members));
  return Ideal{p.down_closure(generators)};
}

Ideal circ(const Poset& p, Ideal a, Ideal b) {
  const Filter fa = complement_filter(p, a), fb = complement_filter(p, b);
  const ElementSet generators = p.minimal(fa.members & fb.members) &
                                (p.minimal(fa.members) | p.minimal(fb.members));
  return complement_ideal(p, Filter{p.up_closure(generators)});
}

std::vector<IdealPair> incomparable_ideal_pairs(const IdealLattice& lattice) {
  std::vector<IdealPair> out;
  const auto& ideals = lattice.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!comparable(ideals[i], ideals[j])) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::size_t> join_irreducibles(const IdealLattice& lattice) {
  // An ideal covers exactly the ideals obtained by removing one maximal element.
  const Poset& p = lattice.poset();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (p.maximal(lattice[k].members).size() == 1) out.push_back(k);
  }
  return out;
}

}  // namespace aslkit
