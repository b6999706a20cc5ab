#include "gdd/kernels.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gdd::kernels {

namespace scalar {

void bulk_weight(const uint64_t* words, size_t count, uint8_t* out) {
  for (size_t i = 0; i < count; ++i)
    out[i] = static_cast<uint8_t>(std::popcount(words[i]));
}

XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x) {
  XorWeightScan scan;
  scan.min_weight = UINT_MAX;
  for (size_t i = 0; i < count; ++i) {
    const unsigned w = static_cast<unsigned>(std::popcount(words[i] ^ x));
    if (w < scan.min_weight) {
      scan.min_weight = w;
      scan.first_index = i;
      scan.tie_count = 1;
    } else if (w == scan.min_weight) {
      ++scan.tie_count;
    }
  }
  return scan;
}

void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out) {
  for (unsigned j = 0; j < n; ++j) out[j] = table[s ^ cols[j]];
}

}  // namespace scalar

namespace {

struct Vtable {
  void (*bulk_weight)(const uint64_t*, size_t, uint8_t*);
  XorWeightScan (*xor_weight_scan)(const uint64_t*, size_t, uint64_t);
  void (*xor_lookup_row)(uint32_t, const uint32_t*, unsigned, const uint32_t*, uint32_t*);
  Backend backend;
};

constexpr Vtable kScalarVtable{scalar::bulk_weight, scalar::xor_weight_scan,
                               scalar::xor_lookup_row, Backend::Scalar};

#if defined(GDD_KERNELS_AVX2)
constexpr Vtable kAvx2Vtable{avx2::bulk_weight, avx2::xor_weight_scan, avx2::xor_lookup_row,
                             Backend::Avx2};
#endif
#if defined(GDD_KERNELS_NEON)
// NEON has no gather; the lookup kernel stays scalar.
constexpr Vtable kNeonVtable{neon::bulk_weight, neon::xor_weight_scan, scalar::xor_lookup_row,
                             Backend::Neon};
#endif

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(GDD_KERNELS_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(GDD_KERNELS_NEON)
      return true;  // baseline on aarch64 builds
#else
      return false;
#endif
  }
  return false;
}

const Vtable* vtable_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &kScalarVtable;
#if defined(GDD_KERNELS_AVX2)
    case Backend::Avx2:
      return &kAvx2Vtable;
#endif
#if defined(GDD_KERNELS_NEON)
    case Backend::Neon:
      return &kNeonVtable;
#endif
    default:
      return nullptr;
  }
}

std::atomic<const Vtable*> g_active{nullptr};

const Vtable* resolve() {
  const Vtable* t = g_active.load(std::memory_order_acquire);
  if (t) return t;
  Backend b = detect_backend();
  t = vtable_for(b);
  g_active.store(t, std::memory_order_release);
  return t;
}

}  // namespace

Backend detect_backend() {
  if (const char* env = std::getenv("GDD_KERNEL_BACKEND")) {
    const std::string want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && cpu_supports(Backend::Avx2)) return Backend::Avx2;
    if (want == "neon" && cpu_supports(Backend::Neon)) return Backend::Neon;
  }
  if (cpu_supports(Backend::Avx2)) return Backend::Avx2;
  if (cpu_supports(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend active_backend() { return resolve()->backend; }

bool backend_available(Backend b) { return cpu_supports(b); }

void set_backend(Backend b) {
  const Vtable* t = cpu_supports(b) ? vtable_for(b) : nullptr;
  if (!t)
    throw std::invalid_argument("kernel backend not available: " +
                                std::string(backend_name(b)));
  g_active.store(t, std::memory_order_release);
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

void bulk_weight(const uint64_t* words, size_t count, uint8_t* out) {
  resolve()->bulk_weight(words, count, out);
}

XorWeightScan xor_weight_scan(const uint64_t* words, size_t count, uint64_t x) {
  if (count == 0) throw std::invalid_argument("xor_weight_scan: empty array");
  return resolve()->xor_weight_scan(words, count, x);
}

void xor_lookup_row(uint32_t s, const uint32_t* cols, unsigned n,
                    const uint32_t* table, uint32_t* out) {
  resolve()->xor_lookup_row(s, cols, n, table, out);
}

}  // namespace gdd::kernels
