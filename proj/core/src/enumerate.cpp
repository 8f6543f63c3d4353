#include "aslkit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "aslkit/errors.hpp"

namespace aslkit {

namespace {

struct Labelling {
  std::vector<bool> key;
  std::vector<ElementIndex> order;
  // Elements that end some minimising extension: the automorphism orbit of the
  // canonical last element.
  ElementSet last_orbit;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()) {}

  Labelling run() {
    order_.reserve(n_);
    bits_.reserve(n_ * n_ / 2);
    extend(ElementSet{}, false);
    return best_;
  }

 private:
  // `ahead` is true once the current prefix is already smaller than the best.
  void extend(ElementSet placed, bool ahead) {
    if (order_.size() == n_) {
      if (!found_ || ahead) {
        best_.key = bits_;
        best_.order = order_;
        best_.last_orbit = ElementSet{};
        found_ = true;
        ++version_;
      }
      best_.last_orbit = best_.last_orbit.with(order_.back());
      return;
    }
    for (ElementIndex v = 0; v < n_; ++v) {
      if (placed.contains(v) || !p_.lower_covers(v).is_subset_of(placed)) continue;
      const std::size_t mark = bits_.size();
      for (ElementIndex u : order_) bits_.push_back(p_.less(u, v));
      bool next_ahead = ahead;
      bool pruned = false;
      if (found_ && !ahead) {
        for (std::size_t i = mark; i < bits_.size(); ++i) {
          if (bits_[i] != best_.key[i]) {
            if (bits_[i] < best_.key[i]) next_ahead = true;
            else pruned = true;
            break;
          }
        }
      }
      if (!pruned) {
        const std::size_t before = version_;
        order_.push_back(v);
        extend(placed.with(v), next_ahead);
        order_.pop_back();
        // A replacement below makes the current prefix a prefix of the best.
        if (version_ != before) ahead = false;
      }
      bits_.resize(mark);
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<ElementIndex> order_;
  std::vector<bool> bits_;
  Labelling best_;
  bool found_ = false;
  std::size_t version_ = 0;
};

std::string encode_key(std::size_t n, const std::vector<bool>& bits) {
  std::string key(1, static_cast<char>(n));
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      byte = static_cast<unsigned char>(byte << 1);
      if (i + j < bits.size() && bits[i + j]) byte |= 1U;
    }
    key.push_back(static_cast<char>(byte));
  }
  return key;
}

std::vector<std::string> canonical_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

Labelling labelling_of(const Poset& p, std::size_t max_elements) {
  if (p.size() > max_elements) {
    throw CapacityExceeded("canonical form supports at most " + std::to_string(max_elements) +
                           " elements");
  }
  return CanonicalSearch(p).run();
}

CanonicalPoset relabel(const Poset& p, const Labelling& l) {
  const std::size_t n = p.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[l.order[i]] = i;
  std::vector<IndexCover> covers;
  for (const auto& [lo, hi] : p.covers()) covers.emplace_back(position[lo], position[hi]);
  return {Poset::from_covers(canonical_labels(n), covers), encode_key(n, l.key)};
}

}  // namespace

CanonicalPoset canonical_form(const Poset& p, std::size_t max_elements) {
  return relabel(p, labelling_of(p, max_elements));
}

std::vector<CanonicalPoset> generate_posets(std::size_t n, unsigned threads) {
  if (n == 0 || n > kMaxCanonicalElements) {
    throw CapacityExceeded("poset generation supports 1 <= n <= " +
                           std::to_string(kMaxCanonicalElements));
  }
  return generate_posets_up_to(n, threads).back();
}

std::vector<std::vector<CanonicalPoset>> generate_posets_up_to(std::size_t n_max,
                                                               unsigned threads) {
  if (n_max > kMaxCanonicalElements) {
    throw CapacityExceeded("poset generation supports n <= " +
                           std::to_string(kMaxCanonicalElements));
  }
  std::vector<std::vector<CanonicalPoset>> levels;
  if (n_max == 0) return levels;
  levels.push_back({canonical_form(antichain_poset({"p1"}))});

  for (std::size_t m = 1; m < n_max; ++m) {
    const auto& parents = levels.back();
    std::vector<std::vector<CanonicalPoset>> children(parents.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < parents.size(); i = next++) {
        const Poset& parent = parents[i].poset;
        std::set<std::string> keys;
        const IdealLattice lattice(parent);
        std::vector<std::string> labels = parent.labels();
        labels.push_back("new");
        for (const Ideal& below : lattice.ideals()) {
          std::vector<IndexCover> covers = parent.covers();
          parent.maximal(below.members).for_each([&](ElementIndex j) { covers.emplace_back(j, m); });
          const Poset child = Poset::from_covers(labels, covers);
          const Labelling l = labelling_of(child, kMaxCanonicalElements);
          if (!l.last_orbit.contains(m)) continue;
          CanonicalPoset c = relabel(child, l);
          if (keys.insert(c.key).second) children[i].push_back(std::move(c));
        }
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::vector<CanonicalPoset> level;
    for (auto& c : children) {
      for (auto& x : c) level.push_back(std::move(x));
    }
    std::sort(level.begin(), level.end(),
              [](const CanonicalPoset& a, const CanonicalPoset& b) { return a.key < b.key; });
    levels.push_back(std::move(level));
  }
  return levels;
}

std::size_t partition_count(std::size_t n) {
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

std::optional<std::size_t> known_poset_count(std::size_t n) {
  static constexpr std::size_t kCounts[] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999};
  if (n < std::size(kCounts)) return kCounts[n];
  return std::nullopt;
}

std::size_t CorpusReport::total_posets() const noexcept {
  std::size_t t = 0;
  for (const auto& x : tallies) t += x.posets;
  return t;
}

std::size_t CorpusReport::total_sums_of_chains() const noexcept {
  std::size_t t = 0;
  for (const auto& x : tallies) t += x.sums_of_chains;
  return t;
}

bool CorpusReport::ok() const noexcept {
  if (!counterexamples.empty()) return false;
  return std::all_of(tallies.begin(), tallies.end(), [](const SizeTally& t) {
    return t.sums_of_chains == t.partitions &&
           (!t.expected_posets || *t.expected_posets == t.posets);
  });
}

namespace {

struct PosetOutcome {
  bool sum_of_chains = false;
  bool condition_ii = false;
  bool unique_checked = false;
  bool certificate_validated = false;
  std::optional<Counterexample> counterexample;
};

PosetOutcome verify_one(const Poset& p, std::size_t n, const CorpusOptions& options) {
  PosetOutcome out;
  const IdealLattice lattice(p);
  out.sum_of_chains = is_direct_sum_of_chains(p);
  const ConditionIIReport cond = check_condition_ii(lattice);
  out.condition_ii = cond.holds;
  if (out.condition_ii != out.sum_of_chains) {
    out.counterexample = Counterexample{
        n, p,
        out.sum_of_chains ? "direct sum of chains but the canonical relation systems differ"
                          : "not a direct sum of chains but the canonical relation systems agree",
        std::nullopt};
    return out;
  }
  if (lattice.size() > options.unique_ideal_bound) return out;

  out.unique_checked = true;
  const UniquenessVerdict verdict = check_unique(lattice);
  if (verdict.unique != out.sum_of_chains) {
    out.counterexample = Counterexample{n, p, "check_unique disagrees with the chain test",
                                        verdict.witness};
  } else if (verdict.unique) {
    const ValidationResult v = validate_certificate(p, *verdict.certificate);
    out.certificate_validated = v.accepted;
    if (!v.accepted) {
      out.counterexample = Counterexample{n, p, "certificate rejected: " + v.reason, std::nullopt};
    }
  } else if (!verdict.witness) {
    out.counterexample = Counterexample{n, p, "no canonical witness of non-uniqueness", std::nullopt};
  }
  return out;
}

}  // namespace

CorpusReport corpus_verify(const CorpusOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CorpusReport report;
  const auto levels = generate_posets_up_to(options.max_n, options.threads);
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto level_start = Clock::now();
    const auto& level = levels[li];
    const std::size_t n = li + 1;
    std::vector<PosetOutcome> outcomes(level.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < level.size(); i = next++) {
        outcomes[i] = verify_one(level[i].poset, n, options);
      }
    };
    if (options.threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    }

    SizeTally tally;
    tally.n = n;
    tally.posets = level.size();
    tally.expected_posets = known_poset_count(n);
    tally.partitions = partition_count(n);
    for (auto& o : outcomes) {
      tally.sums_of_chains += o.sum_of_chains;
      tally.condition_ii_holds += o.condition_ii;
      tally.unique_checked += o.unique_checked;
      tally.certificates_validated += o.certificate_validated;
      if (o.counterexample) report.counterexamples.push_back(std::move(*o.counterexample));
    }
    tally.seconds = std::chrono::duration<double>(Clock::now() - level_start).count();
    report.tallies.push_back(tally);
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace aslkit
