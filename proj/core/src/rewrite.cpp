#include "aslkit/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "aslkit/errors.hpp"

namespace aslkit {

namespace {

using Positions = std::vector<std::size_t>;

Positions to_positions(const IdealLattice& lattice, const std::vector<Ideal>& factors) {
  if (factors.empty()) throw PreconditionViolated("cannot straighten an empty product");
  Positions out;
  out.reserve(factors.size());
  for (const Ideal& f : factors) out.push_back(lattice.position(f));
  std::sort(out.begin(), out.end());
  return out;
}

StandardMonomial to_monomial(const IdealLattice& lattice, const Positions& pos) {
  StandardMonomial m;
  m.factors.reserve(pos.size());
  for (std::size_t k : pos) m.factors.push_back(lattice[k]);
  return m;
}

std::vector<std::size_t> rank_profile(const IdealLattice& lattice, const Positions& pos) {
  std::vector<std::size_t> ranks;
  ranks.reserve(pos.size());
  for (std::size_t k : pos) ranks.push_back(rank(lattice[k]));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

// Applies the relation for (pos[i], pos[j]) and re-sorts.
Positions apply(const IdealLattice& lattice, const PairMap& relations, Positions pos,
                std::size_t i, std::size_t j) {
  const Ideal a = lattice[pos[i]], b = lattice[pos[j]];
  const CompatibleRelation* r = relations.find(a, b);
  if (r == nullptr) throw MissingRelation("no straightening relation for an incomparable pair");
  pos[i] = lattice.position(r->beta);
  pos[j] = lattice.position(r->beta_prime);
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

bool is_multichain(std::vector<Ideal> factors) {
  std::sort(factors.begin(), factors.end(), [](Ideal a, Ideal b) {
    return a.members.size() < b.members.size();
  });
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!factors[i - 1].members.is_subset_of(factors[i].members)) return false;
  }
  return true;
}

StandardMonomial rewrite_to_standard(const IdealLattice& lattice, std::vector<Ideal> factors,
                                     const PairMap& relations, std::size_t max_steps) {
  Positions pos = to_positions(lattice, factors);
  auto measure = rank_profile(lattice, pos);
  for (std::size_t step = 0;; ++step) {
    bool rewritten = false;
    for (std::size_t i = 0; i < pos.size() && !rewritten; ++i) {
      for (std::size_t j = i + 1; j < pos.size() && !rewritten; ++j) {
        if (comparable(lattice[pos[i]], lattice[pos[j]])) continue;
        if (step >= max_steps) {
          throw NonTermination("straightening exceeded " + std::to_string(max_steps) + " steps");
        }
        pos = apply(lattice, relations, std::move(pos), i, j);
        auto next = rank_profile(lattice, pos);
        if (!(next < measure)) {
          throw NonTermination("straightening step did not decrease the rank profile");
        }
        measure = std::move(next);
        rewritten = true;
      }
    }
    if (!rewritten) return to_monomial(lattice, pos);
  }
}

std::vector<StandardMonomial> all_normal_forms(const IdealLattice& lattice,
                                               std::vector<Ideal> factors,
                                               const PairMap& relations,
                                               std::size_t max_states) {
  std::set<Positions> seen;
  std::set<Positions> normal;
  std::deque<Positions> queue;
  Positions start = to_positions(lattice, factors);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Positions pos = std::move(queue.front());
    queue.pop_front();
    bool terminal = true;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        if (comparable(lattice[pos[i]], lattice[pos[j]])) continue;
        terminal = false;
        Positions next = apply(lattice, relations, pos, i, j);
        if (seen.insert(next).second) {
          if (seen.size() > max_states) {
            throw NonTermination("rewrite graph exceeded " + std::to_string(max_states) +
                                 " states");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    if (terminal) normal.insert(pos);
  }
  std::vector<StandardMonomial> out;
  for (const auto& pos : normal) out.push_back(to_monomial(lattice, pos));
  return out;
}

}  // namespace aslkit
