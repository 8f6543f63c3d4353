#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aslkit/lattice.hpp"
#include "aslkit/rational.hpp"

namespace aslkit {

/// A point of R^n with exact rational coordinates, one per poset element
/// (coordinate i belongs to element index i).
struct LatticePoint {
  std::vector<Rational> coords;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Accepts "3", "-2", "1/2"; throws ParseError.
Rational parse_rational(std::string_view text);
/// "0", "1", "3/4", "-1/2".
std::string format_rational(const Rational& q);

/// Indicator vector of a subset.
LatticePoint indicator_point(std::size_t dimension, ElementSet s);

/// One 0/1 vertex per ideal, in lattice order; the empty ideal gives the origin.
std::vector<LatticePoint> order_polytope_vertices(const IdealLattice& lattice);
std::vector<LatticePoint> order_polytope_vertices(const Poset& p);

/// One 0/1 vertex per antichain. Antichains are visited as max(alpha) over the
/// ideals in lattice order, which meets every antichain exactly once.
std::vector<LatticePoint> chain_polytope_vertices(const IdealLattice& lattice);
std::vector<LatticePoint> chain_polytope_vertices(const Poset& p);

/// 0 <= x_i <= 1 and x_i >= x_j whenever p_i <= p_j. Throws DimensionMismatch.
bool point_in_order_polytope(const Poset& p, const LatticePoint& x);
/// x >= 0 and the coordinate sum along each maximal chain is at most 1.
/// Throws DimensionMismatch.
bool point_in_chain_polytope(const Poset& p, const LatticePoint& x);

}  // namespace aslkit
