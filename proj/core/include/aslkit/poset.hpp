#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aslkit/element_set.hpp"

namespace aslkit {

/// A cover relation given by labels: `first` is covered by `second`.
using LabelCover = std::pair<std::string, std::string>;
/// A cover relation given by indices: element `first` is covered by `second`.
using IndexCover = std::pair<ElementIndex, ElementIndex>;

/// A finite poset on at most 64 labelled elements.
///
/// Elements are indexed by a fixed linear extension, so `less(i, j)` implies
/// `i < j`. The order relation is stored as per-element down-sets and up-sets;
/// the cover list is the transitive reduction. Values are immutable once built.
class Poset {
 public:
  /// Builds a poset from labels and cover pairs. Redundant (transitively implied)
  /// pairs are accepted and dropped from the reduction. Elements are reindexed by
  /// a stable topological sort in input order.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<LabelCover>& covers);
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<IndexCover>& covers);

  std::size_t size() const noexcept { return labels_.size(); }
  ElementSet all() const noexcept { return ElementSet::full(size()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex i) const { return labels_.at(i); }
  std::optional<ElementIndex> index_of(std::string_view label) const;

  bool leq(ElementIndex i, ElementIndex j) const noexcept { return down_[j].contains(i); }
  bool less(ElementIndex i, ElementIndex j) const noexcept { return i != j && leq(i, j); }
  bool comparable(ElementIndex i, ElementIndex j) const noexcept {
    return leq(i, j) || leq(j, i);
  }

  /// {k : k <= i}
  ElementSet down_set(ElementIndex i) const { return down_.at(i); }
  /// {k : k >= i}
  ElementSet up_set(ElementIndex i) const { return up_.at(i); }
  ElementSet lower_covers(ElementIndex i) const { return lower_covers_.at(i); }
  ElementSet upper_covers(ElementIndex i) const { return upper_covers_.at(i); }
  /// Transitive reduction, sorted by (upper, lower) index.
  const std::vector<IndexCover>& covers() const noexcept { return covers_; }

  ElementSet down_closure(ElementSet s) const noexcept;
  ElementSet up_closure(ElementSet s) const noexcept;
  bool is_down_closed(ElementSet s) const noexcept;
  bool is_up_closed(ElementSet s) const noexcept;
  bool is_antichain(ElementSet s) const noexcept;
  /// Members of `s` with no strictly larger member of `s`.
  ElementSet maximal(ElementSet s) const noexcept;
  /// Members of `s` with no strictly smaller member of `s`.
  ElementSet minimal(ElementSet s) const noexcept;

  ElementSet labels_to_set(const std::vector<std::string>& names) const;
  /// Member labels sorted lexicographically.
  std::vector<std::string> set_to_labels(ElementSet s) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_;
  }

 private:
  Poset() = default;
  static Poset from_sorted_down_sets(std::vector<std::string> labels,
                                     std::vector<ElementSet> down);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
  std::vector<IndexCover> covers_;
};

/// A strictly increasing sequence of pairwise comparable element indices.
struct Chain {
  std::vector<ElementIndex> elements;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

inline Poset build_poset(std::vector<std::string> labels, const std::vector<LabelCover>& covers) {
  return Poset::from_covers(std::move(labels), covers);
}

/// Same ground set with the order reversed, reindexed by a linear extension of
/// the reversed order.
Poset dual(const Poset& p);

/// Connected components of the comparability graph, ordered by least member.
std::vector<ElementSet> connected_components(const Poset& p);

/// True iff every connected component is totally ordered.
bool is_direct_sum_of_chains(const Poset& p);

/// All maximal chains in lexicographic order of their index sequences.
std::vector<Chain> maximal_chains(const Poset& p);

Poset chain_poset(std::vector<std::string> labels);
Poset antichain_poset(std::vector<std::string> labels);
/// Disjoint union; labels must be distinct across both summands.
Poset direct_sum(const Poset& a, const Poset& b);

}  // namespace aslkit
