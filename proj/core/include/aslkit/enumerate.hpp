#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aslkit/poset.hpp"
#include "aslkit/uniqueness.hpp"

namespace aslkit {

/// A poset relabelled into canonical order together with its isomorphism
/// invariant key.
struct CanonicalPoset {
  Poset poset;
  std::string key;
};

inline constexpr std::size_t kMaxCanonicalElements = 8;

/// Canonical key: the lexicographically least strict-order adjacency bit string
/// over all linear extensions of P, prefixed by n. Two posets are isomorphic
/// iff their keys are equal. The returned poset lists elements in the minimising
/// extension, labelled p1..pn. Throws CapacityExceeded above `max_elements`.
CanonicalPoset canonical_form(const Poset& p, std::size_t max_elements = kMaxCanonicalElements);

/// Every isomorphism class of n-element posets exactly once, sorted by key.
/// Built by adding one maximal element at a time to the (n-1)-element classes,
/// keeping a child only when the added element lies in the automorphism orbit
/// of the last element of the child's canonical labelling.
std::vector<CanonicalPoset> generate_posets(std::size_t n, unsigned threads = 1);

/// Levels 1..n_max; element i-1 holds the i-element classes.
std::vector<std::vector<CanonicalPoset>> generate_posets_up_to(std::size_t n_max,
                                                               unsigned threads = 1);

/// Number of integer partitions of n.
std::size_t partition_count(std::size_t n);

/// Known number of unlabelled posets on n elements, for n <= 8.
std::optional<std::size_t> known_poset_count(std::size_t n);

struct CorpusOptions {
  std::size_t max_n = 6;
  /// check_unique (with certificate validation) runs when |I(P)| is at most this.
  std::size_t unique_ideal_bound = 256;
  unsigned threads = 1;
};

struct SizeTally {
  std::size_t n = 0;
  std::size_t posets = 0;
  std::optional<std::size_t> expected_posets;
  std::size_t sums_of_chains = 0;
  std::size_t partitions = 0;
  std::size_t condition_ii_holds = 0;
  std::size_t unique_checked = 0;
  std::size_t certificates_validated = 0;
  double seconds = 0.0;
};

struct Counterexample {
  std::size_t n = 0;
  Poset poset;
  std::string reason;
  std::optional<NonUniquenessWitness> witness;
};

struct CorpusReport {
  std::vector<SizeTally> tallies;
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;

  std::size_t total_posets() const noexcept;
  std::size_t total_sums_of_chains() const noexcept;
  /// No counterexamples and every tally matches its reference count.
  bool ok() const noexcept;
};

/// Checks, for every poset up to `max_n` elements, that the three canonical
/// relation systems coincide exactly when P is a direct sum of chains, and
/// that check_unique agrees (validating every certificate it emits).
CorpusReport corpus_verify(const CorpusOptions& options = {});

}  // namespace aslkit
