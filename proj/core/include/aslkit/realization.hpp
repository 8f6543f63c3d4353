#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aslkit/asl.hpp"
#include "aslkit/rewrite.hpp"

namespace aslkit {

/// Generators omega_alpha, indexed by lattice position, over `x_variables`
/// x-variables and t.
struct MonomialRealization {
  std::size_t x_variables = 0;
  std::vector<Monomial> generators;
};

/// The generator map of one canonical kind, over x_1..x_n (one per element).
MonomialRealization canonical_realization(const IdealLattice& lattice, RealizationKind kind);

struct AxiomViolation {
  enum class Kind {
    RelationShape,      // relation is not of compatible shape
    RelationIdentity,   // w(a)w(a') != w(b)w(b') in the realization
    StandardCollision,  // two standard monomials share an ambient monomial
    RewriteMismatch,    // straightened product differs from the product
    LeadingFactor,      // straightened first factor not below both inputs
    NonTermination,
    MissingRelation,
  };
  Kind kind;
  std::string message;
  std::vector<Ideal> first;
  std::vector<Ideal> second;
};

std::string_view to_string(AxiomViolation::Kind kind) noexcept;

/// Outcome of the bounded-degree ASL axiom check.
struct AslAxiomReport {
  std::size_t max_degree = 0;
  /// standard_monomials[d] = number of d-multichains of I(P), d = 0..max_degree.
  std::vector<std::size_t> standard_monomials;
  /// products_checked[d] = number of degree-d generator products straightened.
  std::vector<std::size_t> products_checked;
  std::optional<AxiomViolation> violation;

  bool passed() const noexcept { return !violation.has_value(); }
};

inline constexpr std::size_t kDefaultMaxDegree = 3;

/// Checks, for every degree d <= max_degree:
///   (a) distinct standard monomials have distinct ambient monomials;
///   (b) every product of d generators straightens to a standard monomial with
///       the same ambient monomial;
///   (c) every straightened incomparable pair has its first factor below both
///       inputs.
/// Relation shape and the binomial identities of `relations` are checked first.
AslAxiomReport check_asl_axioms(const IdealLattice& lattice, const PairMap& relations,
                                const MonomialRealization& realization,
                                std::size_t max_degree = kDefaultMaxDegree);

/// check_asl_axioms on a canonical kind. Throws PreconditionViolated when
/// max_degree < 2.
AslAxiomReport verify_asl_axioms(const IdealLattice& lattice, RealizationKind kind,
                                 std::size_t max_degree = kDefaultMaxDegree);

/// Every d-multichain of I(P) as lattice positions, ascending.
std::vector<std::vector<std::size_t>> multichains(const IdealLattice& lattice, std::size_t degree);

/// Searches for exponent vectors satisfying every relation of `relations`
/// and passing check_asl_axioms up to `max_degree`.
///
/// The integer kernel of the relation system gives the most general solution:
/// one x-variable per kernel basis vector, each shifted to be nonnegative. Any
/// other realization satisfies every monomial identity this one does, so a
/// collision here rules out all realizations at this degree. A returned value
/// has passed every check; nullopt means none was found within the bound.
std::optional<MonomialRealization> is_realizable(const IdealLattice& lattice,
                                                 const PairMap& relations,
                                                 std::size_t max_degree = kDefaultMaxDegree);

struct SearchOptions {
  std::size_t max_degree = kDefaultMaxDegree;
  /// Largest number of search nodes (partial pair maps) visited.
  std::size_t budget = std::size_t{1} << 22;
  /// When the budget runs out: return what was found so far (true) or throw
  /// BudgetExceeded (false).
  bool allow_partial = false;
  unsigned threads = 1;
};

struct SearchResult {
  std::vector<PairMap> realizable;
  /// Size of the compatible-shape candidate space (saturates at SIZE_MAX).
  std::size_t candidates = 0;
  /// Partial pair maps visited by the search.
  std::size_t nodes = 0;
  /// True when the whole candidate space was decided; otherwise `realizable`
  /// is only a lower bound.
  bool exhausted = false;
};

/// Number of compatible-shape pair maps on I(P), saturating at SIZE_MAX.
std::size_t count_candidate_pair_maps(const IdealLattice& lattice);

/// Decides every compatible-shape pair map and returns the realizable ones,
/// ordered by their candidate choices (pairs in lattice order; per pair, beta
/// then beta' in lattice order).
///
/// The space is explored depth-first, assigning pairs in order of increasing
/// n - (rank(a | a') - rank(a & a')). A partial assignment whose relations
/// already force two standard monomials of degree <= max_degree together is
/// abandoned: more relations only add monomial identities, so no completion
/// can be realizable. Complete assignments are confirmed with is_realizable.
SearchResult search_compatible_asls(const IdealLattice& lattice, const SearchOptions& options = {});

}  // namespace aslkit
