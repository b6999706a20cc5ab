#pragma once

#include <array>
#include <cstdint>

namespace gdd {

// Philox4x64-10 counter-based generator (Salmon et al., same parameters as
// numpy's Philox bit generator).  Streams are selected purely by key, so
// per-trial and per-thread streams are cheap and replayable: stream (seed, s)
// never overlaps stream (seed, s').
class Philox4x64 {
 public:
  static constexpr const char* kName = "philox4x64-10";

  constexpr Philox4x64(uint64_t key0, uint64_t key1) : key_{key0, key1} {}

  static constexpr std::array<uint64_t, 4> block(std::array<uint64_t, 4> ctr,
                                                 std::array<uint64_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const uint64_t hi0 = mulhi(kMult0, ctr[0]);
      const uint64_t lo0 = kMult0 * ctr[0];
      const uint64_t hi1 = mulhi(kMult1, ctr[2]);
      const uint64_t lo1 = kMult1 * ctr[2];
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  constexpr uint64_t next() {
    if (pos_ == 4) {
      buffer_ = block({counter_++, 0, 0, 0}, key_);
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  // Uniform in [0, bound) by rejection-free multiply-shift; bound >= 1.
  constexpr uint64_t next_below(uint64_t bound) {
    // 128-bit multiply keeps the map exactly reproducible.
    const unsigned __int128 p = static_cast<unsigned __int128>(next()) * bound;
    return static_cast<uint64_t>(p >> 64);
  }

  constexpr bool bernoulli(double p) {
    if (p <= 0.0) {
      next();
      return false;
    }
    if (p >= 1.0) {
      next();
      return true;
    }
    const double scaled = p * 18446744073709551616.0;  // p * 2^64
    const uint64_t threshold = static_cast<uint64_t>(scaled);
    return next() < threshold;
  }

 private:
  static constexpr uint64_t kMult0 = 0xD2E7470EE14C6C93ull;
  static constexpr uint64_t kMult1 = 0xCA5A826395121157ull;
  static constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

  static constexpr uint64_t mulhi(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) >> 64);
  }

  std::array<uint64_t, 2> key_;
  std::array<uint64_t, 4> buffer_{};
  uint64_t counter_ = 0;
  unsigned pos_ = 4;
};

// Key derivation for named sub-streams of one master seed.
enum class StreamPurpose : uint64_t {
  Trial = 0,          // index = trial number
  CodeSampling = 1,   // index = resampling attempt
  WordSampling = 2,   // index = batch number
};

constexpr Philox4x64 make_stream(uint64_t seed, StreamPurpose purpose, uint64_t index) {
  return Philox4x64(seed, (static_cast<uint64_t>(purpose) << 48) | index);
}

}  // namespace gdd
