#include "aslkit/uniqueness.hpp"

#include <algorithm>
#include <map>

#include "aslkit/errors.hpp"

namespace aslkit {

namespace {

using PairKey = std::pair<std::uint64_t, std::uint64_t>;

PairKey pair_key(Ideal a, Ideal b) {
  const auto x = a.members.bits(), y = b.members.bits();
  return x < y ? PairKey{x, y} : PairKey{y, x};
}

std::array<Ideal, 3> sorted_triple(Ideal a, Ideal b, Ideal c) {
  std::array<Ideal, 3> t{a, b, c};
  std::sort(t.begin(), t.end(), [](Ideal x, Ideal y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members.bits() < y.members.bits();
  });
  return t;
}

struct CoverChoice {
  std::optional<ElementIndex> p;
  ElementIndex q;
};

// Picks q from `candidates`; `neighbour(q)` is q's relevant cover (empty or
// a single element in a sum of chains).
template <typename Neighbour>
CoverChoice choose_cover(ElementSet candidates, Neighbour neighbour) {
  std::optional<CoverChoice> best_with_p;
  std::optional<ElementIndex> best_q;
  candidates.for_each([&](ElementIndex q) {
    const ElementSet nb = neighbour(q);
    if (nb.empty()) {
      best_q = q;
      return;
    }
    const ElementIndex p = nb.to_vector().back();
    if (!best_with_p || *best_with_p->p < p) best_with_p = CoverChoice{p, q};
  });
  if (best_with_p) return *best_with_p;
  return CoverChoice{std::nullopt, *best_q};
}

}  // namespace

std::string_view to_string(RefutationDirection d) noexcept {
  return d == RefutationDirection::Up ? "up" : "down";
}

UniquenessCertificate uniqueness_certificate(const IdealLattice& lattice) {
  const Poset& p = lattice.poset();
  if (!is_direct_sum_of_chains(p)) {
    throw PreconditionViolated("uniqueness certificates exist only for direct sums of chains");
  }
  const std::size_t n = p.size();

  UniquenessCertificate cert;
  for (const IdealPair& pair : incomparable_ideal_pairs(lattice)) {
    const Ideal a = lattice[pair.first], b = lattice[pair.second];
    CertificateStep step;
    step.alpha = a;
    step.alpha_prime = b;
    step.k = n - (rank(join(a, b)) - rank(meet(a, b)));
    step.beta = meet(a, b);
    step.beta_prime = join(a, b);
    cert.steps.push_back(step);
  }
  std::stable_sort(cert.steps.begin(), cert.steps.end(),
                   [](const CertificateStep& x, const CertificateStep& y) { return x.k < y.k; });

  std::map<PairKey, std::size_t> step_of;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    step_of.emplace(pair_key(cert.steps[i].alpha, cert.steps[i].alpha_prime), i);
  }

  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    CertificateStep& step = cert.steps[s];
    const Ideal lo = step.beta, hi = step.beta_prime;
    std::vector<Ideal> below, above;
    for (const Ideal& g : lattice.ideals()) {
      if (g.members.is_subset_of(lo.members)) below.push_back(g);
      if (hi.members.is_subset_of(g.members)) above.push_back(g);
    }
    for (const Ideal& beta : below) {
      for (const Ideal& beta_prime : above) {
        if (beta == lo && beta_prime == hi) continue;
        Refutation r;
        r.beta = beta;
        r.beta_prime = beta_prime;
        r.alpha = step.alpha;
        r.alpha_prime = step.alpha_prime;
        if (beta_prime != hi) {
          r.direction = RefutationDirection::Up;
          const ElementSet fresh = p.minimal(beta_prime.members - hi.members);
          const CoverChoice c = choose_cover(fresh, [&](ElementIndex q) { return p.lower_covers(q); });
          r.p = c.p;
          r.q = c.q;
          if (r.p && !r.alpha_prime.members.contains(*r.p)) std::swap(r.alpha, r.alpha_prime);
          r.alpha_1 = Ideal{r.alpha_prime.members.with(r.q)};
        } else {
          r.direction = RefutationDirection::Down;
          const ElementSet gone = p.maximal(lo.members - beta.members);
          const CoverChoice c = choose_cover(gone, [&](ElementIndex q) { return p.upper_covers(q); });
          r.p = c.p;
          r.q = c.q;
          if (r.p && r.alpha_prime.members.contains(*r.p)) std::swap(r.alpha, r.alpha_prime);
          r.alpha_1 = Ideal{r.alpha_prime.members.without(r.q)};
        }
        const auto it = step_of.find(pair_key(r.alpha, r.alpha_1));
        if (it == step_of.end() || it->second >= s) {
          throw std::logic_error("inductive pair is not certified before the current step");
        }
        r.inductive_step = it->second;
        r.inductive_beta = cert.steps[it->second].beta;
        r.inductive_beta_prime = cert.steps[it->second].beta_prime;
        r.left = sorted_triple(r.inductive_beta, r.inductive_beta_prime, r.alpha_prime);
        r.right = sorted_triple(r.beta, r.beta_prime, r.alpha_1);
        step.refutations.push_back(r);
      }
    }
  }
  return cert;
}

UniquenessVerdict check_unique(const IdealLattice& lattice) {
  UniquenessVerdict verdict;
  if (is_direct_sum_of_chains(lattice.poset())) {
    verdict.unique = true;
    verdict.certificate = uniqueness_certificate(lattice);
    return verdict;
  }
  const ConditionIIReport report = check_condition_ii(lattice);
  for (const KindComparison& c : report.comparisons) {
    if (!c.result.equal) {
      verdict.witness = NonUniquenessWitness{c.first, c.second, *c.result.witness};
      break;
    }
  }
  return verdict;
}

}  // namespace aslkit
