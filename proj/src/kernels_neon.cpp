// NEON variants of the bulk bit-vector kernels (aarch64).

#include "gdd/kernels.hpp"

#if defined(GDD_KERNELS_NEON)

#include <arm_neon.h>

#include <bit>
#include <climits>

namespace gdd::kernels::neon {

namespace {

inline uint64x2_t popcount_u64x2(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

}  // namespace

void bulk_weight(const uint64_t* words, size_t count, uint8_t* out) {
  size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t w = popcount_u64x2(vld1q_u64(words + i));
    out[i + 0] = static_cast<uint8_t>(vgetq_lane_u64(w, 0));
    out[i + 1] = static_cast<uint8_t>(vgetq_lane_u64(w, 1));
  }
  for (; i < count; ++i) out[i] = static_cast<uint8_t>(std::popcount(words[i]));
}

XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x) {
  XorWeightScan scan;
  scan.min_weight = UINT_MAX;
  scan.tie_count = 0;
  scan.first_index = 0;

  const uint64x2_t bx = vdupq_n_u64(x);
  size_t i = 0;
  uint64x2_t vmin = vdupq_n_u64(65);
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t w = popcount_u64x2(veorq_u64(vld1q_u64(words + i), bx));
    vmin = vbslq_u64(vcltq_u64(w, vmin), w, vmin);
  }
  unsigned min_w = 65;
  const uint64_t l0 = vgetq_lane_u64(vmin, 0), l1 = vgetq_lane_u64(vmin, 1);
  if (l0 < min_w) min_w = static_cast<unsigned>(l0);
  if (l1 < min_w) min_w = static_cast<unsigned>(l1);
  for (size_t t = i; t < count; ++t) {
    const unsigned w = static_cast<unsigned>(std::popcount(words[t] ^ x));
    if (w < min_w) min_w = w;
  }
  scan.min_weight = min_w;

  bool have_first = false;
  for (size_t j = 0; j < count; ++j) {
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

}  // namespace gdd::kernels::neon

#endif  // GDD_KERNELS_NEON
