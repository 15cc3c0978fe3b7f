#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fairdiv {

/// Maximum number of items an instance may carry (one bit per item).
inline constexpr int kMaxItems = 64;

/// A set of item indices in [0, 64), stored as a bit mask.
class ItemSet {
public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint64_t bits) : bits_(bits) {}
  ItemSet(std::initializer_list<int> items) {
    for (int g : items) insert(g);
  }

  static ItemSet from_vector(const std::vector<int>& items) {
    ItemSet s;
    for (int g : items) s.insert(g);
    return s;
  }

  /// {0, ..., m-1}
  static constexpr ItemSet universe(int m) {
    return ItemSet(m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int g) const { return (bits_ >> g) & 1U; }

  constexpr void insert(int g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(int g) { bits_ &= ~(std::uint64_t{1} << g); }

  constexpr ItemSet with(int g) const { return ItemSet(bits_ | (std::uint64_t{1} << g)); }
  constexpr ItemSet without(int g) const { return ItemSet(bits_ & ~(std::uint64_t{1} << g)); }

  constexpr bool intersects(ItemSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(ItemSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Lowest item index, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  /// Highest item index, or -1 when empty.
  constexpr int last() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const;

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) { return ItemSet(a.bits_ | b.bits_); }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) { return ItemSet(a.bits_ & b.bits_); }
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) { return ItemSet(a.bits_ & ~b.bits_); }
  ItemSet& operator|=(ItemSet o) { bits_ |= o.bits_; return *this; }
  ItemSet& operator&=(ItemSet o) { bits_ &= o.bits_; return *this; }
  ItemSet& operator-=(ItemSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ItemSet, ItemSet) = default;
  friend constexpr auto operator<=>(ItemSet, ItemSet) = default;

  /// Iterates item indices in increasing order.
  class iterator {
  public:
    constexpr explicit iterator(std::uint64_t b) : b_(b) {}
    constexpr int operator*() const { return std::countr_zero(b_); }
    constexpr iterator& operator++() { b_ &= b_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return b_ != o.b_; }

  private:
    std::uint64_t b_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace fairdiv
