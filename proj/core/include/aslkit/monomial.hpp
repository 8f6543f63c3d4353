#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aslkit/element_set.hpp"

namespace aslkit {

/// A monomial in x_1..x_m and t, stored as its exponent vector with the
/// t-exponent last. Multiplication adds exponent vectors.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::size_t variable_count() const noexcept {
    return exponents.empty() ? 0 : exponents.size() - 1;
  }
  std::uint32_t t_degree() const noexcept { return exponents.empty() ? 0 : exponents.back(); }

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Squarefree u_W over n variables with t-exponent 0; u_{} = 1.
Monomial monomial_of_subset(std::size_t n, ElementSet w);

/// Product with t.
Monomial times_t(Monomial m);

/// "x_p*x_q*t" using `names` for the x-variables; "1" for the unit.
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace aslkit
