#include "gdd/gf2matrix.hpp"

#include <stdexcept>
#include <utility>

#include "gdd/errors.hpp"

namespace gdd {

GF2Matrix::GF2Matrix(unsigned r, unsigned c) : n_rows(r), n_cols(c), rows(r, 0) {
  if (c > kMaxWordLength) throw std::invalid_argument("GF2Matrix: more than 64 columns");
}

GF2Matrix GF2Matrix::identity(unsigned n) {
  GF2Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.rows[i] = uint64_t{1} << i;
  return m;
}

void GF2Matrix::set_row(unsigned r, BitWord w) {
  if (w.size() != n_cols) throw std::invalid_argument("GF2Matrix::set_row: length mismatch");
  rows[r] = w.bits;
}

RrefResult rref(const GF2Matrix& m) {
  RrefResult res;
  res.reduced = m;
  auto& rows = res.reduced.rows;
  unsigned next_row = 0;
  for (unsigned c = 0; c < m.n_cols && next_row < m.n_rows; ++c) {
    const uint64_t bit = uint64_t{1} << c;
    unsigned pivot = next_row;
    while (pivot < m.n_rows && !(rows[pivot] & bit)) ++pivot;
    if (pivot == m.n_rows) continue;
    std::swap(rows[pivot], rows[next_row]);
    for (unsigned q = 0; q < m.n_rows; ++q)
      if (q != next_row && (rows[q] & bit)) rows[q] ^= rows[next_row];
    res.pivot_cols.push_back(c);
    ++next_row;
  }
  res.rank = next_row;
  return res;
}

unsigned gf2_rank(const GF2Matrix& m) { return rref(m).rank; }

bool product_with_transpose_is_zero(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.n_cols != b.n_cols) throw std::invalid_argument("matrix product: shape mismatch");
  for (uint64_t ra : a.rows)
    for (uint64_t rb : b.rows)
      if (std::popcount(ra & rb) & 1) return false;
  return true;
}

namespace {

// Shared dual construction: given a full-row-rank matrix M (r x n), build the
// (n - r) x n matrix whose rows span the orthogonal complement: one row per
// non-pivot column q, with a 1 at q and the rref column entries at the
// pivots.
GF2Matrix orthogonal_complement(const GF2Matrix& m, const char* what) {
  const RrefResult r = rref(m);
  if (r.rank != m.n_rows)
    throw format_error(std::string(what) + ": input is rank deficient");
  std::vector<bool> is_pivot(m.n_cols, false);
  for (unsigned p : r.pivot_cols) is_pivot[p] = true;

  GF2Matrix out(m.n_cols - m.n_rows, m.n_cols);
  unsigned t = 0;
  for (unsigned q = 0; q < m.n_cols; ++q) {
    if (is_pivot[q]) continue;
    uint64_t row = uint64_t{1} << q;
    for (unsigned i = 0; i < r.pivot_cols.size(); ++i)
      if ((r.reduced.rows[i] >> q) & 1u) row |= uint64_t{1} << r.pivot_cols[i];
    out.rows[t++] = row;
  }
  return out;
}

}  // namespace

GF2Matrix parity_check_from_generator(const GF2Matrix& g) {
  return orthogonal_complement(g, "parity_check_from_generator");
}

GF2Matrix generator_from_parity_check(const GF2Matrix& h) {
  return orthogonal_complement(h, "generator_from_parity_check");
}

}  // namespace gdd
