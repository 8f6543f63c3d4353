#include "aslkit/realization.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>
#include <thread>

#include "aslkit/errors.hpp"
#include "aslkit/rational.hpp"

namespace aslkit {

namespace {

Monomial ambient(const MonomialRealization& r, const std::vector<std::size_t>& positions) {
  Monomial m{std::vector<std::uint32_t>(r.x_variables + 1, 0)};
  for (std::size_t k : positions) m *= r.generators[k];
  return m;
}

std::vector<Ideal> ideals_at(const IdealLattice& lattice, const std::vector<std::size_t>& pos) {
  std::vector<Ideal> out;
  out.reserve(pos.size());
  for (std::size_t k : pos) out.push_back(lattice[k]);
  return out;
}

// Calls f(positions) for every nondecreasing position sequence of length
// `degree`; with `chains_only`, consecutive entries must be nested ideals.
template <typename F>
void for_each_product(const IdealLattice& lattice, std::size_t degree, bool chains_only, F&& f) {
  std::vector<std::size_t> pos;
  pos.reserve(degree);
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (pos.size() == degree) {
      f(pos);
      return;
    }
    for (std::size_t k = from; k < lattice.size(); ++k) {
      if (chains_only && !pos.empty() &&
          !lattice[pos.back()].members.is_subset_of(lattice[k].members)) {
        continue;
      }
      pos.push_back(k);
      self(self, k);
      pos.pop_back();
    }
  };
  extend(extend, 0);
}

// Reduced row echelon form over Q, grown one row at a time.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  // Returns false when `row` lies in the current row space.
  bool insert(std::vector<Rational> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = row[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
      }
    }
    std::size_t pivot = 0;
    while (pivot < columns_ && row[pivot] == 0) ++pivot;
    if (pivot == columns_) return false;
    const Rational inv = 1 / row[pivot];
    for (auto& x : row) {
      if (x != 0) x *= inv;
    }
    for (auto& other : rows_) {
      const Rational f = other[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (row[c] != 0) other[c] -= f * row[c];
      }
    }
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, pivot);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
  }

  // Basis of {v : A v = 0}, one vector per free column, cleared to integers.
  std::vector<std::vector<Integer>> integer_kernel() const {
    std::vector<bool> is_pivot(columns_, false);
    for (std::size_t pc : pivots_) is_pivot[pc] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(columns_, Rational(0));
      v[free] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
      Integer lcm = 1;
      for (const auto& x : v) {
        lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(x)));
      }
      std::vector<Integer> iv;
      iv.reserve(columns_);
      for (const auto& x : v) {
        iv.push_back(boost::multiprecision::numerator(x) *
                     (lcm / boost::multiprecision::denominator(x)));
      }
      basis.push_back(std::move(iv));
    }
    return basis;
  }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> relation_row(const IdealLattice& lattice, std::size_t a, std::size_t b,
                                   std::size_t beta, std::size_t beta_prime) {
  std::vector<Rational> row(lattice.size(), Rational(0));
  row[a] += 1;
  row[b] += 1;
  row[beta] -= 1;
  row[beta_prime] -= 1;
  return row;
}

// One x-variable per kernel vector, shifted to start at 0. Both sides of every
// relation have two factors, so a constant shift preserves them; constant
// coordinates are dropped.
std::optional<MonomialRealization> realization_from_kernel(const RowEchelon& echelon,
                                                           std::size_t generators) {
  std::vector<std::vector<std::uint32_t>> columns;
  for (const auto& v : echelon.integer_kernel()) {
    const Integer lo = *std::min_element(v.begin(), v.end());
    const Integer hi = *std::max_element(v.begin(), v.end());
    if (lo == hi) continue;
    if (hi - lo > std::numeric_limits<std::uint32_t>::max() / 8) return std::nullopt;
    std::vector<std::uint32_t> col;
    col.reserve(generators);
    for (const auto& x : v) col.push_back(static_cast<std::uint32_t>(x - lo));
    columns.push_back(std::move(col));
  }
  MonomialRealization out;
  out.x_variables = columns.size();
  out.generators.reserve(generators);
  for (std::size_t k = 0; k < generators; ++k) {
    Monomial m{std::vector<std::uint32_t>(columns.size() + 1, 0)};
    for (std::size_t c = 0; c < columns.size(); ++c) m.exponents[c] = columns[c][k];
    m.exponents.back() = 1;
    out.generators.push_back(std::move(m));
  }
  return out;
}

std::optional<MonomialRealization> kernel_realization(const IdealLattice& lattice,
                                                      const PairMap& relations) {
  RowEchelon echelon(lattice.size());
  for (const auto& r : relations.relations()) {
    echelon.insert(relation_row(lattice, lattice.position(r.alpha), lattice.position(r.alpha_prime),
                                lattice.position(r.beta), lattice.position(r.beta_prime)));
  }
  return realization_from_kernel(echelon, lattice.size());
}

}  // namespace

std::string_view to_string(AxiomViolation::Kind kind) noexcept {
  using K = AxiomViolation::Kind;
  switch (kind) {
    case K::RelationShape: return "relation-shape";
    case K::RelationIdentity: return "relation-identity";
    case K::StandardCollision: return "standard-collision";
    case K::RewriteMismatch: return "rewrite-mismatch";
    case K::LeadingFactor: return "leading-factor";
    case K::NonTermination: return "non-termination";
    case K::MissingRelation: return "missing-relation";
  }
  return "unknown";
}

MonomialRealization canonical_realization(const IdealLattice& lattice, RealizationKind kind) {
  MonomialRealization r;
  r.x_variables = lattice.poset().size();
  r.generators.reserve(lattice.size());
  for (const Ideal& alpha : lattice.ideals()) {
    r.generators.push_back(realize(lattice.poset(), kind, alpha));
  }
  return r;
}

std::vector<std::vector<std::size_t>> multichains(const IdealLattice& lattice, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  for_each_product(lattice, degree, true, [&](const auto& pos) { out.push_back(pos); });
  return out;
}

AslAxiomReport check_asl_axioms(const IdealLattice& lattice, const PairMap& relations,
                                const MonomialRealization& realization, std::size_t max_degree) {
  using K = AxiomViolation::Kind;
  AslAxiomReport report;
  report.max_degree = max_degree;
  report.standard_monomials.assign(max_degree + 1, 0);
  report.products_checked.assign(max_degree + 1, 0);
  report.standard_monomials[0] = 1;

  auto fail = [&](K kind, std::string message, std::vector<Ideal> first,
                  std::vector<Ideal> second) {
    report.violation = AxiomViolation{kind, std::move(message), std::move(first),
                                      std::move(second)};
    return report;
  };

  for (const auto& r : relations.relations()) {
    if (!has_compatible_shape(r)) {
      return fail(K::RelationShape, "relation is not of compatible shape",
                  {r.alpha, r.alpha_prime}, {r.beta, r.beta_prime});
    }
    const auto lhs = ambient(realization, {lattice.position(r.alpha), lattice.position(r.alpha_prime)});
    const auto rhs = ambient(realization, {lattice.position(r.beta), lattice.position(r.beta_prime)});
    if (lhs != rhs) {
      return fail(K::RelationIdentity, "relation does not hold in the realization",
                  {r.alpha, r.alpha_prime}, {r.beta, r.beta_prime});
    }
  }

  // (a) standard monomials are independent: distinct ambient monomials.
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::map<Monomial, std::vector<std::size_t>> seen;
    std::optional<AxiomViolation> collision;
    for_each_product(lattice, d, true, [&](const std::vector<std::size_t>& pos) {
      ++report.standard_monomials[d];
      if (collision) return;
      auto [it, inserted] = seen.emplace(ambient(realization, pos), pos);
      if (!inserted) {
        collision = AxiomViolation{K::StandardCollision,
                                   "two standard monomials of degree " + std::to_string(d) +
                                       " have the same ambient monomial",
                                   ideals_at(lattice, it->second), ideals_at(lattice, pos)};
      }
    });
    if (collision) {
      report.violation = std::move(collision);
      return report;
    }
  }

  // (b) every product straightens to a standard monomial equal to it.
  for (std::size_t d = 2; d <= max_degree; ++d) {
    std::optional<AxiomViolation> bad;
    for_each_product(lattice, d, false, [&](const std::vector<std::size_t>& pos) {
      if (bad) return;
      ++report.products_checked[d];
      const auto factors = ideals_at(lattice, pos);
      try {
        const StandardMonomial sm = rewrite_to_standard(lattice, factors, relations);
        std::vector<std::size_t> out;
        for (const Ideal& f : sm.factors) out.push_back(lattice.position(f));
        if (ambient(realization, out) != ambient(realization, pos)) {
          bad = AxiomViolation{K::RewriteMismatch, "straightened product changed its value",
                               factors, sm.factors};
        }
      } catch (const NonTermination& e) {
        bad = AxiomViolation{K::NonTermination, e.what(), factors, {}};
      } catch (const MissingRelation& e) {
        bad = AxiomViolation{K::MissingRelation, e.what(), factors, {}};
      }
    });
    if (bad) {
      report.violation = std::move(bad);
      return report;
    }
  }

  // (c) the first factor of a straightened incomparable pair lies below both.
  if (max_degree >= 2) {
    for (const IdealPair& pair : incomparable_ideal_pairs(lattice)) {
      const Ideal a = lattice[pair.first], b = lattice[pair.second];
      try {
        const StandardMonomial sm = rewrite_to_standard(lattice, {a, b}, relations);
        const Ideal lead = sm.factors.front();
        if (!lead.members.is_subset_of(a.members & b.members)) {
          return fail(K::LeadingFactor, "leading factor is not below both factors", {a, b},
                      sm.factors);
        }
      } catch (const MissingRelation& e) {
        return fail(K::MissingRelation, e.what(), {a, b}, {});
      } catch (const NonTermination& e) {
        return fail(K::NonTermination, e.what(), {a, b}, {});
      }
    }
  }
  return report;
}

AslAxiomReport verify_asl_axioms(const IdealLattice& lattice, RealizationKind kind,
                                 std::size_t max_degree) {
  if (max_degree < 2) throw PreconditionViolated("max_degree must be at least 2");
  return check_asl_axioms(lattice, straightening_relations(lattice, kind),
                          canonical_realization(lattice, kind), max_degree);
}

std::optional<MonomialRealization> is_realizable(const IdealLattice& lattice,
                                                 const PairMap& relations,
                                                 std::size_t max_degree) {
  for (const auto& r : relations.relations()) {
    if (!has_compatible_shape(r)) return std::nullopt;
  }
  auto realization = kernel_realization(lattice, relations);
  if (!realization) return std::nullopt;
  if (!check_asl_axioms(lattice, relations, *realization, max_degree).passed()) {
    return std::nullopt;
  }
  return realization;
}

namespace {

struct CandidateSpace {
  std::vector<IdealPair> pairs;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> choices;
  std::size_t total = 1;
};

CandidateSpace candidate_space(const IdealLattice& lattice) {
  CandidateSpace space;
  space.pairs = incomparable_ideal_pairs(lattice);
  for (const IdealPair& pair : space.pairs) {
    const ElementSet lo = lattice[pair.first].members & lattice[pair.second].members;
    const ElementSet hi = lattice[pair.first].members | lattice[pair.second].members;
    std::vector<std::size_t> below, above;
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      if (lattice[k].members.is_subset_of(lo)) below.push_back(k);
      if (hi.is_subset_of(lattice[k].members)) above.push_back(k);
    }
    std::vector<std::pair<std::size_t, std::size_t>> c;
    for (std::size_t b : below) {
      for (std::size_t t : above) c.emplace_back(b, t);
    }
    if (space.total > std::numeric_limits<std::size_t>::max() / c.size()) {
      space.total = std::numeric_limits<std::size_t>::max();
    } else if (space.total != std::numeric_limits<std::size_t>::max()) {
      space.total *= c.size();
    }
    space.choices.push_back(std::move(c));
  }
  return space;
}

bool has_standard_collision(const MonomialRealization& r,
                            const std::vector<std::vector<std::vector<std::size_t>>>& chains) {
  for (const auto& level : chains) {
    std::unordered_set<Monomial, MonomialHash> seen;
    seen.reserve(level.size());
    for (const auto& pos : level) {
      if (!seen.insert(ambient(r, pos)).second) return true;
    }
  }
  return false;
}

class Search {
 public:
  Search(const IdealLattice& lattice, const SearchOptions& options)
      : lattice_(lattice), options_(options), space_(candidate_space(lattice)) {
    const std::size_t n = lattice.poset().size();
    order_.resize(space_.pairs.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    auto k_of = [&](std::size_t i) {
      const Ideal a = lattice[space_.pairs[i].first], b = lattice[space_.pairs[i].second];
      return n - (rank(join(a, b)) - rank(meet(a, b)));
    };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return k_of(x) < k_of(y); });
    for (std::size_t d = 1; d <= options.max_degree; ++d) chains_.push_back(multichains(lattice, d));
  }

  SearchResult run() {
    SearchResult result;
    result.candidates = space_.total;
    const unsigned threads = std::max(1U, options_.threads);
    if (order_.empty() || threads == 1) {
      std::vector<std::size_t> choice(space_.pairs.size(), 0);
      descend(0, RowEchelon(lattice_.size()), choice);
    } else {
      // Split on the first assigned pair; the shared root counts as one node.
      ++nodes_;
      const std::size_t first = order_.front();
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t c = next++; c < space_.choices[first].size(); c = next++) {
          std::vector<std::size_t> choice(space_.pairs.size(), 0);
          branch(0, RowEchelon(lattice_.size()), choice, c);
        }
      };
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (aborted_ && !options_.allow_partial) {
      throw BudgetExceeded("search exceeded its budget of " + std::to_string(options_.budget) +
                           " nodes");
    }
    std::sort(found_.begin(), found_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [choice, pm] : found_) result.realizable.push_back(std::move(pm));
    result.nodes = nodes_;
    result.exhausted = !aborted_;
    return result;
  }

 private:
  void descend(std::size_t depth, const RowEchelon& echelon, std::vector<std::size_t>& choice) {
    if (aborted_) return;
    if (nodes_++ >= options_.budget) {
      aborted_ = true;
      return;
    }
    if (depth == order_.size()) {
      complete(choice);
      return;
    }
    const std::size_t pair = order_[depth];
    for (std::size_t c = 0; c < space_.choices[pair].size() && !aborted_; ++c) {
      branch(depth, echelon, choice, c);
    }
  }

  void branch(std::size_t depth, const RowEchelon& echelon, std::vector<std::size_t>& choice,
              std::size_t c) {
    const std::size_t pair = order_[depth];
    const auto [beta, beta_prime] = space_.choices[pair][c];
    RowEchelon next = echelon;
    if (next.insert(relation_row(lattice_, space_.pairs[pair].first, space_.pairs[pair].second,
                                 beta, beta_prime))) {
      const auto r = realization_from_kernel(next, lattice_.size());
      if (!r || has_standard_collision(*r, chains_)) return;
    }
    choice[pair] = c;
    descend(depth + 1, next, choice);
  }

  void complete(const std::vector<std::size_t>& choice) {
    std::vector<CompatibleRelation> rel;
    rel.reserve(choice.size());
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto [b, t] = space_.choices[i][choice[i]];
      rel.push_back({lattice_[space_.pairs[i].first], lattice_[space_.pairs[i].second],
                     lattice_[b], lattice_[t]});
    }
    PairMap pm(std::move(rel));
    if (!is_realizable(lattice_, pm, options_.max_degree)) return;
    std::lock_guard lock(mutex_);
    found_.emplace_back(choice, std::move(pm));
  }

  const IdealLattice& lattice_;
  const SearchOptions& options_;
  CandidateSpace space_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::vector<std::size_t>>> chains_;
  std::atomic<std::size_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::mutex mutex_;
  std::vector<std::pair<std::vector<std::size_t>, PairMap>> found_;
};

}  // namespace

std::size_t count_candidate_pair_maps(const IdealLattice& lattice) {
  return candidate_space(lattice).total;
}

SearchResult search_compatible_asls(const IdealLattice& lattice, const SearchOptions& options) {
  return Search(lattice, options).run();
}

}  // namespace aslkit
