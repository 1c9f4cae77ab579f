#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace topobelief {

/// Largest carrier the library supports. Worlds are indices 0..n-1.
inline constexpr int kMaxWorlds = 16;

/// A set of worlds packed into one machine word (bit i set <=> world i is a member).
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint32_t bits) : bits_(bits) {}
  WorldSet(std::initializer_list<int> worlds) {
    for (int w : worlds) bits_ |= bit(w);
  }

  static WorldSet from_worlds(std::span<const int> worlds) {
    WorldSet s;
    for (int w : worlds) s.bits_ |= bit(w);
    return s;
  }
  static constexpr WorldSet full(int n) {
    return WorldSet(n >= 32 ? ~0u : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr WorldSet singleton(int x) { return WorldSet(bit(x)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }
  /// Index of the smallest member; -1 when empty.
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  /// Largest member plus one; 0 when empty.
  constexpr int span_end() const { return 32 - std::countl_zero(bits_); }

  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet operator^(WorldSet o) const { return WorldSet(bits_ ^ o.bits_); }
  constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }
  constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
  constexpr WorldSet& operator-=(WorldSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const WorldSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Calls fn(x) for every member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// "{0,2}" style rendering used in reports.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int x) {
      if (!first) s += ',';
      s += std::to_string(x);
      first = false;
    });
    return s + "}";
  }

 private:
  static constexpr std::uint32_t bit(int x) { return std::uint32_t{1} << x; }
  std::uint32_t bits_ = 0;
};

/// Canonical order of subsets: by cardinality, then by the numeric value of the bit pattern.
struct CanonicalLess {
  bool operator()(WorldSet a, WorldSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace topobelief
