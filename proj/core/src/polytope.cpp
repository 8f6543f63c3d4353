#include "aslkit/polytope.hpp"

#include <cctype>

#include "aslkit/errors.hpp"

namespace aslkit {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  boost::multiprecision::cpp_int value(std::string(text.substr(start)));
  return (text[0] == '-') ? -value : value;
}

void check_dimension(const Poset& p, const LatticePoint& x) {
  if (x.coords.size() != p.size()) {
    throw DimensionMismatch("point has " + std::to_string(x.coords.size()) +
                            " coordinates but the poset has " + std::to_string(p.size()) +
                            " elements");
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

LatticePoint indicator_point(std::size_t dimension, ElementSet s) {
  LatticePoint x{std::vector<Rational>(dimension, Rational(0))};
  s.for_each([&](ElementIndex i) { x.coords[i] = 1; });
  return x;
}

std::vector<LatticePoint> order_polytope_vertices(const IdealLattice& lattice) {
  std::vector<LatticePoint> out;
  out.reserve(lattice.size());
  for (const Ideal& alpha : lattice.ideals()) {
    out.push_back(indicator_point(lattice.poset().size(), alpha.members));
  }
  return out;
}

std::vector<LatticePoint> order_polytope_vertices(const Poset& p) {
  return order_polytope_vertices(IdealLattice(p));
}

std::vector<LatticePoint> chain_polytope_vertices(const IdealLattice& lattice) {
  std::vector<LatticePoint> out;
  out.reserve(lattice.size());
  for (const Ideal& alpha : lattice.ideals()) {
    out.push_back(indicator_point(lattice.poset().size(), max_elements(lattice.poset(), alpha)));
  }
  return out;
}

std::vector<LatticePoint> chain_polytope_vertices(const Poset& p) {
  return chain_polytope_vertices(IdealLattice(p));
}

bool point_in_order_polytope(const Poset& p, const LatticePoint& x) {
  check_dimension(p, x);
  for (const auto& c : x.coords) {
    if (c < 0 || c > 1) return false;
  }
  for (ElementIndex j = 0; j < p.size(); ++j) {
    bool ok = true;
    p.down_set(j).for_each([&](ElementIndex i) {
      if (x.coords[i] < x.coords[j]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool point_in_chain_polytope(const Poset& p, const LatticePoint& x) {
  check_dimension(p, x);
  for (const auto& c : x.coords) {
    if (c < 0) return false;
  }
  for (const Chain& chain : maximal_chains(p)) {
    Rational sum = 0;
    for (ElementIndex i : chain.elements) sum += x.coords[i];
    if (sum > 1) return false;
  }
  return true;
}

}  // namespace aslkit
