#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdd {

inline constexpr unsigned kMaxWordLength = 64;

inline constexpr uint64_t word_mask(unsigned n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// A vector in F_2^n with n <= 64, packed into one machine word.
//
// Bit index j (0-based) is written position j+1: the leftmost character of
// "1010" is index 0.  XOR is the group operation; in characteristic 2 addition
// and subtraction coincide.
struct BitWord {
  uint64_t bits = 0;
  uint8_t length = 0;

  constexpr BitWord() = default;
  constexpr BitWord(uint64_t bits_, unsigned length_)
      : bits(bits_), length(static_cast<uint8_t>(length_)) {
    if (length_ > kMaxWordLength)
      throw std::invalid_argument("BitWord: length exceeds 64");
    if ((bits_ & ~word_mask(length_)) != 0)
      throw std::invalid_argument("BitWord: bits outside declared length");
  }

  static constexpr BitWord zero(unsigned n) { return BitWord(0, n); }
  static constexpr BitWord unit(unsigned n, unsigned j) {
    if (j >= n) throw std::invalid_argument("BitWord::unit: position out of range");
    return BitWord(uint64_t{1} << j, n);
  }

  constexpr unsigned size() const { return length; }
  constexpr unsigned weight() const { return static_cast<unsigned>(std::popcount(bits)); }
  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool test(unsigned j) const { return (bits >> j) & 1u; }
  constexpr BitWord& flip(unsigned j) {
    bits ^= uint64_t{1} << j;
    return *this;
  }

  constexpr BitWord& operator^=(BitWord o) {
    require_same_length(o);
    bits ^= o.bits;
    return *this;
  }
  friend constexpr BitWord operator^(BitWord a, BitWord b) { return a ^= b; }
  friend constexpr bool operator==(const BitWord&, const BitWord&) = default;

  // supp(a) subset of supp(b)
  static constexpr bool support_subset(BitWord a, BitWord b) {
    return (a.bits & ~b.bits) == 0;
  }

  std::string str() const {
    std::string s(length, '0');
    for (unsigned j = 0; j < length; ++j)
      if (test(j)) s[j] = '1';
    return s;
  }

  constexpr void require_same_length(BitWord o) const {
    if (length != o.length) throw std::invalid_argument("BitWord: length mismatch");
  }
};

BitWord parse_word(std::string_view s);

// The word read as an unsigned integer with position 1 most significant.
constexpr uint64_t msb_first_value(uint64_t bits, unsigned n) {
  uint64_t v = 0;
  for (unsigned j = 0; j < n; ++j)
    if ((bits >> j) & 1u) v |= uint64_t{1} << (n - 1 - j);
  return v;
}

// Comparison on raw equal-length packed words: lower Hamming weight first,
// equal weight decided by the MSB-first integer reading (smaller integer
// first).  The first differing position is the most significant one, so the
// word with a 0 there is the smaller integer.
constexpr std::strong_ordering weight_compare_raw(uint64_t a, uint64_t b) {
  const int wa = std::popcount(a), wb = std::popcount(b);
  if (wa != wb) return wa <=> wb;
  const uint64_t diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const unsigned j = static_cast<unsigned>(std::countr_zero(diff));
  return ((a >> j) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
}

constexpr bool weight_less_raw(uint64_t a, uint64_t b) {
  return weight_compare_raw(a, b) < 0;
}

// The degree-compatible total order everything else depends on.
struct WeightOrder {
  std::strong_ordering compare(BitWord a, BitWord b) const {
    a.require_same_length(b);
    return weight_compare_raw(a.bits, b.bits);
  }
  bool less(BitWord a, BitWord b) const { return compare(a, b) < 0; }
  bool operator()(BitWord a, BitWord b) const { return less(a, b); }
};

}  // namespace gdd
