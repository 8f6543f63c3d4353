#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aslkit/asl.hpp"

namespace aslkit {

/// Which side of a non-canonical relation is refuted.
///   Up:   beta' strictly contains alpha | alpha'; alpha_1 = alpha' + {q}.
///   Down: beta strictly inside alpha & alpha';   alpha_1 = alpha' - {q}.
enum class RefutationDirection { Up, Down };

std::string_view to_string(RefutationDirection d) noexcept;

/// Why one alternative right-hand side (beta, beta') for a pair cannot be a
/// straightening relation of any compatible ASL.
///
/// `alpha`/`alpha_prime` are the pair, oriented so that alpha_1 (alpha' with
/// q added or removed) is again an ideal. The already certified relation for
/// the incomparable pair (alpha, alpha_1), together with the alternative,
/// makes the standard monomials `left` and `right` equal:
///   left  = {inductive_beta, inductive_beta_prime, alpha'}
///   right = {beta, beta', alpha_1}
/// which contradicts linear independence of standard monomials.
struct Refutation {
  RefutationDirection direction = RefutationDirection::Up;
  Ideal beta;
  Ideal beta_prime;
  Ideal alpha;
  Ideal alpha_prime;
  /// Up: the element q covers (in alpha'). Down: the element covering q
  /// (outside alpha'). Absent when q has no such neighbour.
  std::optional<ElementIndex> p;
  ElementIndex q = 0;
  Ideal alpha_1;
  std::size_t inductive_step = 0;
  Ideal inductive_beta;
  Ideal inductive_beta_prime;
  std::array<Ideal, 3> left;
  std::array<Ideal, 3> right;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

/// One incomparable pair, its forced relation (alpha & alpha', alpha | alpha'),
/// and a refutation of every other compatible right-hand side.
struct CertificateStep {
  Ideal alpha;
  Ideal alpha_prime;
  /// n - (rank(alpha | alpha') - rank(alpha & alpha'))
  std::size_t k = 0;
  Ideal beta;
  Ideal beta_prime;
  std::vector<Refutation> refutations;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// Steps ordered by nondecreasing k; every refutation cites an earlier step.
struct UniquenessCertificate {
  std::vector<CertificateStep> steps;
  friend bool operator==(const UniquenessCertificate&, const UniquenessCertificate&) = default;
};

/// Builds the certificate that the order relations are the only compatible
/// straightening relations on I(P). Throws PreconditionViolated unless P is a
/// direct sum of chains.
///
/// Choices: for an Up refutation, q ranges over the minimal elements of
/// beta' - (alpha | alpha'); the q whose lower cover p has the largest index is
/// taken, and if no q has a lower cover, the largest-index q. The pair is
/// swapped when needed so p lies in alpha'. Down refutations mirror this with
/// maximal elements of (alpha & alpha') - beta and upper covers, swapping so
/// p lies outside alpha'.
UniquenessCertificate uniqueness_certificate(const IdealLattice& lattice);

struct NonUniquenessWitness {
  RealizationKind first;
  RealizationKind second;
  RelationDifference difference;
};

struct UniquenessVerdict {
  bool unique = false;
  std::optional<UniquenessCertificate> certificate;
  std::optional<NonUniquenessWitness> witness;
};

/// UNIQUE with a certificate when P is a direct sum of chains; otherwise
/// NOT_UNIQUE with the first differing canonical pair, compared in
/// (Order, Chain), (Order, ChainDual), (Chain, ChainDual) order.
UniquenessVerdict check_unique(const IdealLattice& lattice);

struct ValidationResult {
  bool accepted = false;
  std::string reason;
};

/// Replays a certificate against P using only ideal arithmetic. Independent of
/// uniqueness_certificate.
ValidationResult validate_certificate(const Poset& p, const UniquenessCertificate& certificate);

}  // namespace aslkit
