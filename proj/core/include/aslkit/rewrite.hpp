#pragma once

#include <cstddef>
#include <vector>

#include "aslkit/asl.hpp"

namespace aslkit {

/// A product of generators indexed by a multichain of I(P), stored in
/// ascending lattice order.
struct StandardMonomial {
  std::vector<Ideal> factors;
  friend bool operator==(const StandardMonomial&, const StandardMonomial&) = default;
  friend auto operator<=>(const StandardMonomial&, const StandardMonomial&) = default;
};

/// True iff the factors, taken in any order, form a multichain.
bool is_multichain(std::vector<Ideal> factors);

inline constexpr std::size_t kDefaultRewriteBudget = 1U << 16;

/// Straightens a product of generators by repeatedly replacing the
/// lexicographically first incomparable pair (factors sorted by lattice
/// position) with the right-hand side its relation assigns.
///
/// Termination: for a compatible relation |beta| < min(|alpha|, |alpha'|), so
/// the ascending tuple of factor ranks strictly decreases lexicographically at
/// every step. The tuple ranges over a finite set, hence rewriting stops. The
/// decrease is asserted at each step; a violation (malformed relation) or more
/// than `max_steps` steps raises NonTermination. A pair with no relation raises
/// MissingRelation.
StandardMonomial rewrite_to_standard(const IdealLattice& lattice, std::vector<Ideal> factors,
                                     const PairMap& relations,
                                     std::size_t max_steps = kDefaultRewriteBudget);

/// Every standard monomial reachable by rewriting incomparable pairs in any
/// order. A single result means the rewriting is confluent on this input.
/// Throws NonTermination after `max_states` distinct intermediate products.
std::vector<StandardMonomial> all_normal_forms(const IdealLattice& lattice,
                                               std::vector<Ideal> factors,
                                               const PairMap& relations,
                                               std::size_t max_states = kDefaultRewriteBudget);

}  // namespace aslkit
