#pragma once

#include <cstdint>
#include <vector>

#include "gdd/bitword.hpp"

namespace gdd {

// Matrix over F_2 with at most 64 columns, one packed word per row.
// Entry (r, c) is bit c of rows[r]; row reduction is word-wide XOR.
struct GF2Matrix {
  unsigned n_rows = 0;
  unsigned n_cols = 0;
  std::vector<uint64_t> rows;

  GF2Matrix() = default;
  GF2Matrix(unsigned r, unsigned c);

  static GF2Matrix identity(unsigned n);

  bool get(unsigned r, unsigned c) const { return (rows[r] >> c) & 1u; }
  void set(unsigned r, unsigned c, bool v) {
    if (v)
      rows[r] |= uint64_t{1} << c;
    else
      rows[r] &= ~(uint64_t{1} << c);
  }

  BitWord row_word(unsigned r) const { return BitWord(rows[r], n_cols); }
  void set_row(unsigned r, BitWord w);

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;
};

struct RrefResult {
  GF2Matrix reduced;
  unsigned rank = 0;
  std::vector<unsigned> pivot_cols;
};

// Reduced row echelon form over F_2.
RrefResult rref(const GF2Matrix& m);

unsigned gf2_rank(const GF2Matrix& m);

// Rows of a times columns of b_transposed are all orthogonal, i.e.
// a * b^T = 0 over F_2.
bool product_with_transpose_is_zero(const GF2Matrix& a, const GF2Matrix& b);

// Derive one matrix of the dual pair from the other.  Input must have full
// row rank; the output is in the systematic-like form induced by the input's
// pivot columns and satisfies G * H^T = 0.
GF2Matrix parity_check_from_generator(const GF2Matrix& g);
GF2Matrix generator_from_parity_check(const GF2Matrix& h);

}  // namespace gdd
