#include "aslkit/dot.hpp"

#include <sstream>

namespace aslkit {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : p.set_to_labels(s)) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string hasse_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& label : p.labels()) os << "  " << quoted(label) << ";\n";
  for (const auto& [lo, hi] : p.covers()) {
    os << "  " << quoted(p.label(lo)) << " -> " << quoted(p.label(hi)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string lattice_dot(const IdealLattice& lattice) {
  const Poset& p = lattice.poset();
  std::ostringstream os;
  os << "digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    os << "  I" << k << " [label=" << quoted(set_label(p, lattice[k].members)) << "];\n";
  }
  // beta covers alpha iff beta = alpha + {x} for a single element x.
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const ElementSet s = lattice[k].members;
    p.maximal(s).for_each([&](ElementIndex x) {
      os << "  I" << lattice.position(s.without(x)) << " -> I" << k << ";\n";
    });
  }
  os << "}\n";
  return os.str();
}

}  // namespace aslkit
