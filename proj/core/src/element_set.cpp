#include "aslkit/element_set.hpp"

namespace aslkit {

std::vector<ElementIndex> ElementSet::to_vector() const {
  std::vector<ElementIndex> out;
  out.reserve(size());
  for_each([&](ElementIndex i) { out.push_back(i); });
  return out;
}

}  // namespace aslkit
