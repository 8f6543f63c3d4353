#include "aslkit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "aslkit/errors.hpp"

namespace aslkit {

namespace {

void check_capacity(std::size_t n) {
  if (n > kMaxElements) {
    throw CapacityExceeded("poset has " + std::to_string(n) + " elements; at most " +
                           std::to_string(kMaxElements) + " are supported");
  }
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<LabelCover>& covers) {
  check_capacity(labels.size());
  std::unordered_map<std::string, ElementIndex> position;
  for (ElementIndex i = 0; i < labels.size(); ++i) {
    if (!position.emplace(labels[i], i).second) {
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }
  }
  std::vector<IndexCover> indexed;
  indexed.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = position.find(lo);
    if (a == position.end()) throw UnknownLabel("cover references unknown label '" + lo + "'");
    auto b = position.find(hi);
    if (b == position.end()) throw UnknownLabel("cover references unknown label '" + hi + "'");
    indexed.emplace_back(a->second, b->second);
  }
  return from_covers(std::move(labels), indexed);
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<IndexCover>& covers) {
  const std::size_t n = labels.size();
  check_capacity(n);
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw DuplicateLabel("duplicate element label '" + l + "'");
    }
  }

  std::vector<ElementSet> preds(n);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw UnknownLabel("cover references an element index out of range");
    if (lo == hi) throw CycleDetected("element '" + labels[lo] + "' is declared below itself");
    preds[hi] = preds[hi].with(lo);
  }

  // Stable topological sort: always emit the smallest input index whose
  // predecessors have all been emitted.
  std::vector<ElementIndex> order;
  order.reserve(n);
  ElementSet emitted;
  while (order.size() < n) {
    bool progressed = false;
    for (ElementIndex i = 0; i < n; ++i) {
      if (!emitted.contains(i) && preds[i].is_subset_of(emitted)) {
        order.push_back(i);
        emitted = emitted.with(i);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      std::string names;
      (ElementSet::full(n) - emitted).for_each([&](ElementIndex i) {
        if (!names.empty()) names += ", ";
        names += labels[i];
      });
      throw CycleDetected("cover relation contains a cycle through {" + names + "}");
    }
  }

  std::vector<ElementIndex> new_index(n);
  for (ElementIndex k = 0; k < n; ++k) new_index[order[k]] = k;

  std::vector<std::string> sorted_labels(n);
  std::vector<ElementSet> down(n);
  for (ElementIndex k = 0; k < n; ++k) {
    const ElementIndex old = order[k];
    sorted_labels[k] = std::move(labels[old]);
    ElementSet d = ElementSet::singleton(k);
    preds[old].for_each([&](ElementIndex p) { d |= down[new_index[p]]; });
    down[k] = d;
  }
  return from_sorted_down_sets(std::move(sorted_labels), std::move(down));
}

Poset Poset::from_sorted_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.down_ = std::move(down);
  p.up_.assign(n, ElementSet{});
  p.lower_covers_.assign(n, ElementSet{});
  p.upper_covers_.assign(n, ElementSet{});
  for (ElementIndex i = 0; i < n; ++i) {
    p.index_.emplace(p.labels_[i], i);
    p.down_[i].for_each([&](ElementIndex j) { p.up_[j] = p.up_[j].with(i); });
  }
  for (ElementIndex j = 0; j < n; ++j) {
    const ElementSet strict_below = p.down_[j].without(j);
    // Lower covers of j: maximal elements strictly below j.
    ElementSet implied;
    strict_below.for_each([&](ElementIndex i) { implied |= p.down_[i].without(i); });
    p.lower_covers_[j] = strict_below - implied;
    p.lower_covers_[j].for_each([&](ElementIndex i) {
      p.upper_covers_[i] = p.upper_covers_[i].with(j);
      p.covers_.emplace_back(i, j);
    });
  }
  return p;
}

std::optional<ElementIndex> Poset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet Poset::down_closure(ElementSet s) const noexcept {
  ElementSet out;
  s.for_each([&](ElementIndex i) { out |= down_[i]; });
  return out;
}

ElementSet Poset::up_closure(ElementSet s) const noexcept {
  ElementSet out;
  s.for_each([&](ElementIndex i) { out |= up_[i]; });
  return out;
}

bool Poset::is_down_closed(ElementSet s) const noexcept { return down_closure(s) == s; }
bool Poset::is_up_closed(ElementSet s) const noexcept { return up_closure(s) == s; }

bool Poset::is_antichain(ElementSet s) const noexcept {
  bool ok = true;
  s.for_each([&](ElementIndex i) {
    if (!(down_[i] & s).without(i).empty()) ok = false;
  });
  return ok;
}

ElementSet Poset::maximal(ElementSet s) const noexcept {
  ElementSet out;
  s.for_each([&](ElementIndex i) {
    if ((up_[i] & s).without(i).empty()) out = out.with(i);
  });
  return out;
}

ElementSet Poset::minimal(ElementSet s) const noexcept {
  ElementSet out;
  s.for_each([&](ElementIndex i) {
    if ((down_[i] & s).without(i).empty()) out = out.with(i);
  });
  return out;
}

ElementSet Poset::labels_to_set(const std::vector<std::string>& names) const {
  ElementSet out;
  for (const auto& name : names) {
    auto i = index_of(name);
    if (!i) throw UnknownLabel("unknown element label '" + name + "'");
    out = out.with(*i);
  }
  return out;
}

std::vector<std::string> Poset::set_to_labels(ElementSet s) const {
  std::vector<std::string> out;
  s.for_each([&](ElementIndex i) { out.push_back(labels_[i]); });
  std::sort(out.begin(), out.end());
  return out;
}

Poset dual(const Poset& p) {
  std::vector<IndexCover> reversed;
  reversed.reserve(p.covers().size());
  for (const auto& [lo, hi] : p.covers()) reversed.emplace_back(hi, lo);
  return Poset::from_covers(p.labels(), reversed);
}

std::vector<ElementSet> connected_components(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<ElementIndex> parent(n);
  std::iota(parent.begin(), parent.end(), ElementIndex{0});
  auto find = [&](ElementIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [lo, hi] : p.covers()) {
    const ElementIndex a = find(lo), b = find(hi);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<ElementSet> by_root(n);
  for (ElementIndex i = 0; i < n; ++i) by_root[find(i)] = by_root[find(i)].with(i);
  std::vector<ElementSet> out;
  for (const auto& c : by_root) {
    if (!c.empty()) out.push_back(c);
  }
  return out;
}

bool is_direct_sum_of_chains(const Poset& p) {
  for (const ElementSet component : connected_components(p)) {
    bool total = true;
    component.for_each([&](ElementIndex i) {
      if (!(p.down_set(i) | p.up_set(i)).is_subset_of(component) ||
          !component.is_subset_of(p.down_set(i) | p.up_set(i))) {
        total = false;
      }
    });
    if (!total) return false;
  }
  return true;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  std::vector<ElementIndex> path;
  auto extend = [&](auto&& self, ElementIndex i) -> void {
    path.push_back(i);
    const ElementSet up = p.upper_covers(i);
    if (up.empty()) {
      out.push_back(Chain{path});
    } else {
      up.for_each([&](ElementIndex j) { self(self, j); });
    }
    path.pop_back();
  };
  p.minimal(p.all()).for_each([&](ElementIndex i) { extend(extend, i); });
  std::sort(out.begin(), out.end());
  return out;
}

Poset chain_poset(std::vector<std::string> labels) {
  std::vector<IndexCover> covers;
  for (ElementIndex i = 1; i < labels.size(); ++i) covers.emplace_back(i - 1, i);
  return Poset::from_covers(std::move(labels), covers);
}

Poset antichain_poset(std::vector<std::string> labels) {
  return Poset::from_covers(std::move(labels), std::vector<IndexCover>{});
}

Poset direct_sum(const Poset& a, const Poset& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<IndexCover> covers = a.covers();
  for (const auto& [lo, hi] : b.covers()) covers.emplace_back(lo + a.size(), hi + a.size());
  return Poset::from_covers(std::move(labels), covers);
}

}  // namespace aslkit
