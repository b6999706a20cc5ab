// AVX2 variants of the bulk bit-vector kernels.  This translation unit is
// compiled with -mavx2; callers reach it only through the runtime dispatch,
// which checks cpu support first.

#include "gdd/kernels.hpp"

#if defined(GDD_KERNELS_AVX2)

#include <immintrin.h>

#include <bit>
#include <climits>

namespace gdd::kernels::avx2 {

namespace {

// Per-byte popcount via the nibble LUT, then _mm256_sad_epu8 folds each
// 64-bit lane into its weight.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                      _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

void bulk_weight(const uint64_t* words, size_t count, uint8_t* out) {
  size_t i = 0;
  alignas(32) uint64_t lanes[4];
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(v));
    out[i + 0] = static_cast<uint8_t>(lanes[0]);
    out[i + 1] = static_cast<uint8_t>(lanes[1]);
    out[i + 2] = static_cast<uint8_t>(lanes[2]);
    out[i + 3] = static_cast<uint8_t>(lanes[3]);
  }
  for (; i < count; ++i) out[i] = static_cast<uint8_t>(std::popcount(words[i]));
}

XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x) {
  XorWeightScan scan;
  scan.min_weight = UINT_MAX;
  scan.tie_count = 0;
  scan.first_index = 0;

  const __m256i bx = _mm256_set1_epi64x(static_cast<long long>(x));
  size_t i = 0;

  // Pass 1: vector minimum of the lane weights.
  __m256i vmin = _mm256_set1_epi64x(65);
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_xor_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)), bx);
    const __m256i w = popcount_epi64(v);
    // Weights are at most 64, so signed 64-bit compares are safe.
    const __m256i lt = _mm256_cmpgt_epi64(vmin, w);
    vmin = _mm256_blendv_epi8(vmin, w, lt);
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmin);
  unsigned min_w = 65;
  for (uint64_t l : lanes) min_w = l < min_w ? static_cast<unsigned>(l) : min_w;
  for (size_t t = i; t < count; ++t) {
    const unsigned w = static_cast<unsigned>(std::popcount(words[t] ^ x));
    if (w < min_w) min_w = w;
  }
  scan.min_weight = min_w;

  // Pass 2: first index and tie count at the minimum.
  const __m256i bmin = _mm256_set1_epi64x(static_cast<long long>(min_w));
  bool have_first = false;
  size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i v = _mm256_xor_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + j)), bx);
    const __m256i eq = _mm256_cmpeq_epi64(popcount_epi64(v), bmin);
    const unsigned mask =
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
    if (mask) {
      scan.tie_count += static_cast<size_t>(std::popcount(mask));
      if (!have_first) {
        scan.first_index = j + static_cast<unsigned>(std::countr_zero(mask));
        have_first = true;
      }
    }
  }
  for (; j < count; ++j) {
    if (static_cast<unsigned>(std::popcount(words[j] ^ x)) == min_w) {
      ++scan.tie_count;
      if (!have_first) {
        scan.first_index = j;
        have_first = true;
      }
    }
  }
  return scan;
}

void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out) {
  const __m256i bs = _mm256_set1_epi32(static_cast<int>(s));
  unsigned j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols + j));
    const __m256i idx = _mm256_xor_si256(bs, c);
    const __m256i vals =
        _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), vals);
  }
  for (; j < n; ++j) out[j] = table[s ^ cols[j]];
}

}  // namespace gdd::kernels::avx2

#endif  // GDD_KERNELS_AVX2
