#pragma once

#include <string>

#include "aslkit/lattice.hpp"

namespace aslkit {

/// Hasse diagram in DOT, one edge per cover, drawn bottom to top.
std::string hasse_dot(const Poset& p);

/// Hasse diagram of I(P); nodes are labelled by their member sets.
std::string lattice_dot(const IdealLattice& lattice);

}  // namespace aslkit
