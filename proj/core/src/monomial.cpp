#include "aslkit/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace aslkit {

Monomial& Monomial::operator*=(const Monomial& other) {
  if (exponents.size() < other.exponents.size()) {
    // Keep t last when widening.
    const std::uint32_t t = t_degree();
    if (!exponents.empty()) exponents.back() = 0;
    exponents.resize(other.exponents.size(), 0);
    exponents.back() = t;
  }
  const std::size_t m = other.variable_count();
  for (std::size_t i = 0; i < m; ++i) exponents[i] += other.exponents[i];
  if (!other.exponents.empty()) exponents.back() += other.exponents.back();
  return *this;
}

Monomial monomial_of_subset(std::size_t n, ElementSet w) {
  Monomial m{std::vector<std::uint32_t>(n + 1, 0)};
  w.for_each([&](ElementIndex i) { m.exponents[i] = 1; });
  return m;
}

Monomial times_t(Monomial m) {
  if (m.exponents.empty()) m.exponents.push_back(0);
  ++m.exponents.back();
  return m;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  auto factor = [&](const std::string& var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.variable_count(); ++i) {
    factor(i < names.size() ? "x_" + names[i] : "x" + std::to_string(i + 1), m.exponents[i]);
  }
  factor("t", m.t_degree());
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.exponents.size();
  for (std::uint32_t e : m.exponents) h = h * 1000003U ^ e;
  return h;
}

}  // namespace aslkit
