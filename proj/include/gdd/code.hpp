#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gdd/bitword.hpp"
#include "gdd/gf2matrix.hpp"

namespace gdd {

// H * w^T over F_2, packed into n-k bits.  Bit r is the parity against row
// r+1 of H.  Equal syndromes mean equal cosets.
struct Syndrome {
  uint64_t bits = 0;
  uint8_t length = 0;

  constexpr Syndrome() = default;
  constexpr Syndrome(uint64_t bits_, unsigned length_) : bits(bits_), length(static_cast<uint8_t>(length_)) {}

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(const Syndrome&, const Syndrome&) = default;
  friend constexpr Syndrome operator^(Syndrome a, Syndrome b) {
    return Syndrome(a.bits ^ b.bits, a.length);
  }
  std::string str() const { return BitWord(bits, length).str(); }
};

inline constexpr unsigned kDefaultEnumerationCap = 24;  // refuse 2^k beyond this

// A binary [n, k] linear code held as a generator / parity-check pair.
// Construction validates rank(G) = k, rank(H) = n-k and G * H^T = 0.
class BinaryCode {
 public:
  BinaryCode(GF2Matrix generator, GF2Matrix parity_check);

  static BinaryCode from_generator(GF2Matrix generator);
  static BinaryCode from_parity_check(GF2Matrix parity_check);

  unsigned length() const { return n_; }
  unsigned dimension() const { return k_; }
  unsigned redundancy() const { return n_ - k_; }

  const GF2Matrix& generator() const { return g_; }
  const GF2Matrix& parity_check() const { return h_; }

  Syndrome syndrome(BitWord w) const;
  // Hot path: packed word in, packed syndrome out, no length check.
  uint64_t syndrome_bits(uint64_t word_bits) const {
    uint64_t s = 0;
    while (word_bits) {
      s ^= hcols_[std::countr_zero(word_bits)];
      word_bits &= word_bits - 1;
    }
    return s;
  }
  // Syndrome of the unit vector e_{j+1}: column j of H.
  uint64_t column_syndrome(unsigned j) const { return hcols_[j]; }
  const std::vector<uint64_t>& column_syndromes() const { return hcols_; }

  bool is_codeword(BitWord w) const { return syndrome(w).is_zero(); }

  // Sum of the generator rows selected by the message bits.
  BitWord encode(uint64_t message_bits) const;

  // All 2^k codewords as packed words, Gray-code enumeration order starting
  // at zero.  Refuses k beyond max_dimension.
  std::vector<uint64_t> all_codewords(unsigned max_dimension = kDefaultEnumerationCap) const;

 private:
  unsigned n_ = 0;
  unsigned k_ = 0;
  GF2Matrix g_;
  GF2Matrix h_;
  std::vector<uint64_t> hcols_;
};

// Text format: first line "n k", then k rows of G as 0/1 strings, then an
// optional line "H" followed by n-k rows.  Inconsistent dimensions, rank
// deficiencies and G * H^T != 0 are rejected.
BinaryCode read_code(std::istream& in);
BinaryCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const BinaryCode& code, bool with_parity_check = true);

}  // namespace gdd
