#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace aslkit {

/// Index of a poset element under the poset's fixed linear extension.
using ElementIndex = std::size_t;

/// Largest poset size the library accepts; subsets are single machine words.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of poset elements stored as a 64-bit mask (bit i = element i).
class ElementSet {
 public:
  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr ElementSet singleton(ElementIndex i) noexcept {
    return ElementSet{std::uint64_t{1} << i};
  }
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) noexcept {
    return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(ElementIndex i) const noexcept {
    return (bits_ >> i) & 1U;
  }
  constexpr bool is_subset_of(ElementSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const noexcept {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  constexpr ElementSet with(ElementIndex i) const noexcept {
    return ElementSet{bits_ | (std::uint64_t{1} << i)};
  }
  constexpr ElementSet without(ElementIndex i) const noexcept {
    return ElementSet{bits_ & ~(std::uint64_t{1} << i)};
  }

  constexpr ElementSet operator|(ElementSet o) const noexcept { return ElementSet{bits_ | o.bits_}; }
  constexpr ElementSet operator&(ElementSet o) const noexcept { return ElementSet{bits_ & o.bits_}; }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const noexcept { return ElementSet{bits_ & ~o.bits_}; }
  constexpr ElementSet& operator|=(ElementSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) noexcept { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const ElementSet&) const noexcept = default;

  /// Calls f(i) for each member in increasing index order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<ElementIndex>(std::countr_zero(b)));
    }
  }

  std::vector<ElementIndex> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace aslkit

template <>
struct std::hash<aslkit::ElementSet> {
  std::size_t operator()(aslkit::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
