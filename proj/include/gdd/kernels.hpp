#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Bulk bit-vector kernels: scalar reference implementations plus SIMD
// variants selected at runtime.  Every variant is equivalence-tested against
// the scalar reference; callers go through the dispatching front ends.

namespace gdd::kernels {

enum class Backend { Scalar, Avx2, Neon };

// Result of scanning wt(words[i] ^ x) over an array.
struct XorWeightScan {
  unsigned min_weight = 0;
  size_t first_index = 0;  // smallest index attaining the minimum
  size_t tie_count = 0;    // number of indices attaining it
};

// wt(words[i]) -> out[i], one byte each.
void bulk_weight(const uint64_t* words, size_t count, uint8_t* out);

// Minimum, first argmin and tie count of wt(words[i] ^ x).  count >= 1.
XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x);

// out[j] = table[s ^ cols[j]] for j < n.  Every s ^ cols[j] must be a valid
// table index; used to fill one row of the coset transition table.
void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out);

Backend active_backend();
bool backend_available(Backend b);
// Force a specific backend (tests, --kernels flag).  Throws
// std::invalid_argument if the backend is not available on this machine.
void set_backend(Backend b);
// Honors GDD_KERNEL_BACKEND={scalar,avx2,neon} from the environment, else
// picks the best available.  Called lazily by the front ends.
Backend detect_backend();
std::string_view backend_name(Backend b);

namespace scalar {
void bulk_weight(const uint64_t* words, size_t count, uint8_t* out);
XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x);
void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out);
}  // namespace scalar

#if defined(GDD_KERNELS_AVX2)
namespace avx2 {
void bulk_weight(const uint64_t* words, size_t count, uint8_t* out);
XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x);
void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out);
}  // namespace avx2
#endif

#if defined(GDD_KERNELS_NEON)
namespace neon {
void bulk_weight(const uint64_t* words, size_t count, uint8_t* out);
XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x);
}  // namespace neon
#endif

}  // namespace gdd::kernels
