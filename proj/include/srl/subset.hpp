#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace srl {

/// Index of an element in the carrier 0..n-1 of a finite structure.
using Elem = std::size_t;

/// Largest carrier supported by `Subset`.
inline constexpr std::size_t kMaxSize = 64;

/// A subset of a carrier of at most `kMaxSize` elements, stored as one word.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  constexpr Subset(std::initializer_list<Elem> elems) {
    for (Elem x : elems) bits_ |= bit(x);
  }

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::vector<Elem> const& elems) {
    Subset s;
    for (Elem x : elems) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem x) const { return (bits_ >> x) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }

  constexpr void insert(Elem x) { bits_ |= bit(x); }
  constexpr void erase(Elem x) { bits_ &= ~bit(x); }

  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subset o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  /// Smallest member; undefined on the empty set.
  constexpr Elem first() const { return std::countr_zero(bits_); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;

  /// Lexicographic order on the membership vector read from element 0 up:
  /// at the first element where the sets differ, the set lacking it is smaller.
  friend constexpr bool lex_less(Subset a, Subset b) {
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    return !a.contains(std::countr_zero(diff));
  }

 private:
  static constexpr std::uint64_t bit(Elem x) { return std::uint64_t{1} << x; }
  std::uint64_t bits_ = 0;
};

}  // namespace srl
