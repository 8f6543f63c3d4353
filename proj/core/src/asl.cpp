#include "aslkit/asl.hpp"

#include <algorithm>

#include "aslkit/errors.hpp"

namespace aslkit {

std::string_view to_string(RealizationKind kind) noexcept {
  switch (kind) {
    case RealizationKind::Order: return "order";
    case RealizationKind::Chain: return "chain";
    case RealizationKind::ChainDual: return "chain-dual";
  }
  return "unknown";
}

RealizationKind parse_realization_kind(std::string_view name) {
  for (RealizationKind k : kRealizationKinds) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown realization kind '" + std::string(name) +
                   "' (expected order, chain or chain-dual)");
}

Monomial realize(const Poset& p, RealizationKind kind, Ideal alpha) {
  ElementSet support;
  switch (kind) {
    case RealizationKind::Order: support = alpha.members; break;
    case RealizationKind::Chain: support = max_elements(p, alpha); break;
    case RealizationKind::ChainDual:
      support = min_elements(p, complement_filter(p, alpha));
      break;
  }
  return times_t(monomial_of_subset(p.size(), support));
}

bool has_compatible_shape(const CompatibleRelation& r) noexcept {
  const ElementSet lo = r.alpha.members & r.alpha_prime.members;
  const ElementSet hi = r.alpha.members | r.alpha_prime.members;
  return !comparable(r.alpha, r.alpha_prime) && r.beta.members.is_subset_of(lo) &&
         hi.is_subset_of(r.beta_prime.members);
}

std::pair<std::uint64_t, std::uint64_t> PairMap::key(Ideal a, Ideal b) noexcept {
  const auto x = a.members.bits(), y = b.members.bits();
  return x < y ? std::pair{x, y} : std::pair{y, x};
}

PairMap::PairMap(std::vector<CompatibleRelation> relations) : relations_(std::move(relations)) {
  index_.reserve(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    index_.emplace(key(relations_[i].alpha, relations_[i].alpha_prime), i);
  }
}

const CompatibleRelation* PairMap::find(Ideal a, Ideal b) const {
  auto it = index_.find(key(a, b));
  return it == index_.end() ? nullptr : &relations_[it->second];
}

bool operator==(const PairMap& a, const PairMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& r : a.relations()) {
    const CompatibleRelation* s = b.find(r.alpha, r.alpha_prime);
    if (s == nullptr || s->beta != r.beta || s->beta_prime != r.beta_prime) return false;
  }
  return true;
}

PairMap straightening_relations(const IdealLattice& lattice, RealizationKind kind) {
  const Poset& p = lattice.poset();
  std::vector<CompatibleRelation> out;
  for (const IdealPair& pair : incomparable_ideal_pairs(lattice)) {
    const Ideal a = lattice[pair.first], b = lattice[pair.second];
    CompatibleRelation r{a, b, meet(a, b), join(a, b)};
    if (kind == RealizationKind::Chain) r.beta = star(p, a, b);
    if (kind == RealizationKind::ChainDual) r.beta_prime = circ(p, a, b);
    out.push_back(r);
  }
  return PairMap(std::move(out));
}

RelationComparison compare_pair_maps(const IdealLattice& lattice, const PairMap& a,
                                     const PairMap& b) {
  for (const IdealPair& pair : incomparable_ideal_pairs(lattice)) {
    const Ideal x = lattice[pair.first], y = lattice[pair.second];
    const CompatibleRelation* ra = a.find(x, y);
    const CompatibleRelation* rb = b.find(x, y);
    const bool same = ra != nullptr && rb != nullptr && ra->beta == rb->beta &&
                      ra->beta_prime == rb->beta_prime;
    if (!same) {
      RelationDifference d{x, y, {}, {}};
      const CompatibleRelation missing{x, y, {}, {}};
      d.first = ra ? *ra : missing;
      d.second = rb ? *rb : missing;
      return {false, d};
    }
  }
  return {true, std::nullopt};
}

RelationComparison relations_equal(const IdealLattice& lattice, RealizationKind a,
                                   RealizationKind b) {
  return compare_pair_maps(lattice, straightening_relations(lattice, a),
                           straightening_relations(lattice, b));
}

ConditionIIReport check_condition_ii(const IdealLattice& lattice) {
  const PairMap order = straightening_relations(lattice, RealizationKind::Order);
  const PairMap chain = straightening_relations(lattice, RealizationKind::Chain);
  const PairMap chain_dual = straightening_relations(lattice, RealizationKind::ChainDual);
  ConditionIIReport report;
  report.comparisons = {
      KindComparison{RealizationKind::Order, RealizationKind::Chain,
                     compare_pair_maps(lattice, order, chain)},
      KindComparison{RealizationKind::Order, RealizationKind::ChainDual,
                     compare_pair_maps(lattice, order, chain_dual)},
      KindComparison{RealizationKind::Chain, RealizationKind::ChainDual,
                     compare_pair_maps(lattice, chain, chain_dual)},
  };
  report.holds = std::all_of(report.comparisons.begin(), report.comparisons.end(),
                             [](const KindComparison& c) { return c.result.equal; });
  return report;
}

PairMap transport_from_dual(const IdealLattice& lattice, const IdealLattice& dual_lattice,
                            const PairMap& dual_relations) {
  const Poset& p = lattice.poset();
  const Poset& d = dual_lattice.poset();
  if (p.size() != d.size()) throw DimensionMismatch("dual poset has a different ground set");
  std::vector<ElementIndex> to_p(d.size());
  for (ElementIndex i = 0; i < d.size(); ++i) {
    auto j = p.index_of(d.label(i));
    if (!j) throw UnknownLabel("dual poset element '" + d.label(i) + "' is not in the poset");
    to_p[i] = *j;
  }
  auto complement = [&](Ideal dual_ideal) {
    ElementSet mapped;
    dual_ideal.members.for_each([&](ElementIndex i) { mapped = mapped.with(to_p[i]); });
    return Ideal{p.all() - mapped};
  };
  std::vector<CompatibleRelation> out;
  out.reserve(dual_relations.size());
  for (const auto& r : dual_relations.relations()) {
    out.push_back({complement(r.alpha), complement(r.alpha_prime), complement(r.beta_prime),
                   complement(r.beta)});
  }
  return PairMap(std::move(out));
}

}  // namespace aslkit
