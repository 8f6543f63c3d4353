#include <algorithm>
#include <set>

#include "aslkit/uniqueness.hpp"

namespace aslkit {

namespace {

struct Rejection {
  std::string reason;
};

std::multiset<std::uint64_t> as_multiset(const std::array<Ideal, 3>& t) {
  return {t[0].members.bits(), t[1].members.bits(), t[2].members.bits()};
}

bool is_chain(const std::array<Ideal, 3>& t) {
  std::array<ElementSet, 3> s{t[0].members, t[1].members, t[2].members};
  std::sort(s.begin(), s.end(), [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
  return s[0].is_subset_of(s[1]) && s[1].is_subset_of(s[2]);
}

bool same_pair(Ideal a, Ideal b, Ideal c, Ideal d) {
  return (a == c && b == d) || (a == d && b == c);
}

class Replay {
 public:
  Replay(const Poset& p, const UniquenessCertificate& cert)
      : p_(p), lattice_(p), cert_(cert) {}

  void run() {
    // A direct sum of chains is exactly a poset whose Hasse diagram has no
    // element with two lower or two upper covers.
    for (ElementIndex i = 0; i < p_.size(); ++i) {
      if (p_.lower_covers(i).size() > 1 || p_.upper_covers(i).size() > 1) {
        reject("poset is not a direct sum of chains");
      }
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected;
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      for (std::size_t j = i + 1; j < lattice_.size(); ++j) {
        if (!comparable(lattice_[i], lattice_[j])) {
          const std::uint64_t a = lattice_[i].members.bits(), b = lattice_[j].members.bits();
          expected.emplace(std::min(a, b), std::max(a, b));
        }
      }
    }
    if (cert_.steps.size() != expected.size()) {
      reject("certificate has " + std::to_string(cert_.steps.size()) + " steps but I(P) has " +
             std::to_string(expected.size()) + " incomparable pairs");
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t s = 0; s < cert_.steps.size(); ++s) {
      const auto& step = cert_.steps[s];
      const std::string at = "step " + std::to_string(s) + ": ";
      require_ideal(step.alpha, at + "alpha");
      require_ideal(step.alpha_prime, at + "alpha'");
      const std::uint64_t a = step.alpha.members.bits(), b = step.alpha_prime.members.bits();
      const std::pair key{std::min(a, b), std::max(a, b)};
      if (!expected.contains({key.first, key.second})) reject(at + "pair is not incomparable");
      if (!seen.emplace(key.first, key.second).second) reject(at + "pair certified twice");
      check_step(s);
    }
  }

 private:
  [[noreturn]] void reject(std::string reason) { throw Rejection{std::move(reason)}; }

  void require_ideal(Ideal g, const std::string& what) {
    if (!g.members.is_subset_of(p_.all()) || !lattice_.find(g.members)) {
      reject(what + " is not an ideal");
    }
  }

  void check_step(std::size_t s) {
    const auto& step = cert_.steps[s];
    const std::string at = "step " + std::to_string(s) + ": ";
    const Ideal lo = meet(step.alpha, step.alpha_prime);
    const Ideal hi = join(step.alpha, step.alpha_prime);
    const std::size_t k = p_.size() - (rank(hi) - rank(lo));
    if (step.k != k) reject(at + "wrong induction parameter k");
    if (s > 0 && cert_.steps[s - 1].k > step.k) reject(at + "steps are not sorted by k");
    if (step.beta != lo || step.beta_prime != hi) reject(at + "forced relation is not (meet, join)");
    if (k == 0 && (!lo.members.empty() || hi.members != p_.all())) {
      reject(at + "k = 0 but the pair does not split P");
    }

    std::vector<std::pair<Ideal, Ideal>> alternatives;
    for (const Ideal& b : lattice_.ideals()) {
      if (!b.members.is_subset_of(lo.members)) continue;
      for (const Ideal& t : lattice_.ideals()) {
        if (!hi.members.is_subset_of(t.members)) continue;
        if (b == lo && t == hi) continue;
        alternatives.emplace_back(b, t);
      }
    }
    if (alternatives.size() != step.refutations.size()) {
      reject(at + "expected " + std::to_string(alternatives.size()) + " refutations, found " +
             std::to_string(step.refutations.size()));
    }
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
      const auto& r = step.refutations[i];
      const std::string where = at + "refutation " + std::to_string(i) + ": ";
      if (r.beta != alternatives[i].first || r.beta_prime != alternatives[i].second) {
        reject(where + "alternative does not match the enumeration");
      }
      check_refutation(s, r, lo, hi, where);
    }
  }

  void check_refutation(std::size_t s, const Refutation& r, Ideal lo, Ideal hi,
                        const std::string& where) {
    const auto& step = cert_.steps[s];
    if (r.alpha == r.alpha_prime || !same_pair(r.alpha, r.alpha_prime, step.alpha, step.alpha_prime)) {
      reject(where + "oriented pair does not match the step");
    }
    require_ideal(r.alpha_1, where + "alpha_1");
    if (r.q >= p_.size()) reject(where + "q is not an element");
    if (r.p && *r.p >= p_.size()) reject(where + "p is not an element");

    if (r.direction == RefutationDirection::Up) {
      if (r.beta_prime == hi) reject(where + "up refutation needs beta' above the join");
      if (!(r.beta_prime.members - hi.members).contains(r.q)) {
        reject(where + "q is not in beta' minus the join");
      }
      if (r.alpha_1.members != r.alpha_prime.members.with(r.q)) reject(where + "alpha_1 != alpha' + q");
      const ElementSet below = p_.lower_covers(r.q);
      if (below.empty() != !r.p.has_value()) reject(where + "p does not match the lower cover of q");
      if (r.p && (!below.contains(*r.p) || !r.alpha_prime.members.contains(*r.p))) {
        reject(where + "p is not a lower cover of q inside alpha'");
      }
    } else {
      if (r.beta == lo) reject(where + "down refutation needs beta below the meet");
      if (!(lo.members - r.beta.members).contains(r.q)) {
        reject(where + "q is not in the meet minus beta");
      }
      if (!r.alpha_prime.members.contains(r.q) ||
          r.alpha_1.members != r.alpha_prime.members.without(r.q)) {
        reject(where + "alpha_1 != alpha' - q");
      }
      const ElementSet above = p_.upper_covers(r.q);
      if (above.empty() != !r.p.has_value()) reject(where + "p does not match the upper cover of q");
      if (r.p && (!above.contains(*r.p) || r.alpha_prime.members.contains(*r.p))) {
        reject(where + "p is not an upper cover of q outside alpha'");
      }
    }
    if (comparable(r.alpha, r.alpha_1)) reject(where + "alpha and alpha_1 are comparable");

    if (r.inductive_step >= s) reject(where + "inductive step is not earlier");
    const auto& ind = cert_.steps[r.inductive_step];
    if (!same_pair(ind.alpha, ind.alpha_prime, r.alpha, r.alpha_1)) {
      reject(where + "inductive step certifies a different pair");
    }
    if (ind.k >= step.k) reject(where + "inductive step does not have smaller k");
    if (r.inductive_beta != ind.beta || r.inductive_beta_prime != ind.beta_prime) {
      reject(where + "inductive relation does not match the cited step");
    }

    for (const Ideal& g : r.left) require_ideal(g, where + "left factor");
    for (const Ideal& g : r.right) require_ideal(g, where + "right factor");
    if (as_multiset(r.left) !=
        as_multiset({r.inductive_beta, r.inductive_beta_prime, r.alpha_prime})) {
      reject(where + "left monomial is not derived from the inductive relation");
    }
    if (as_multiset(r.right) != as_multiset({r.beta, r.beta_prime, r.alpha_1})) {
      reject(where + "right monomial is not derived from the alternative");
    }
    if (!is_chain(r.left) || !is_chain(r.right)) reject(where + "collision is not between standard monomials");
    if (as_multiset(r.left) == as_multiset(r.right)) reject(where + "colliding monomials coincide");
  }

  const Poset& p_;
  IdealLattice lattice_;
  const UniquenessCertificate& cert_;
};

}  // namespace

ValidationResult validate_certificate(const Poset& p, const UniquenessCertificate& certificate) {
  try {
    Replay(p, certificate).run();
  } catch (const Rejection& r) {
    return {false, r.reason};
  }
  return {true, "ok"};
}

}  // namespace aslkit
