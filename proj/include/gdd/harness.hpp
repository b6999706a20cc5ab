#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdd/bitword.hpp"
#include "gdd/border.hpp"
#include "gdd/code.hpp"
#include "gdd/rng.hpp"

namespace gdd {

// Classic Hamming code of redundancy r: n = 2^r - 1, column j+1 of H is the
// binary expansion of j+1 with row 1 the least significant bit.
BinaryCode make_hamming_code(unsigned redundancy);
BinaryCode make_repetition_code(unsigned n);
// Random full-rank generator; rank-deficient samples are redrawn.
BinaryCode make_random_code(unsigned n, unsigned k, uint64_t seed);

// "hamming:3" | "repetition:5" | "random:10,4[,seed]" | "file:PATH"
BinaryCode named_code(std::string_view spec);

// One BSC error pattern: each bit set independently with probability p.
BitWord bsc_sample(double p, unsigned n, Philox4x64& rng);

enum class Algorithm { LGdda, TsGdda, ReductionGdda, CompactReductionGdda, MlBruteforce };
std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct SampledMode {
  uint64_t trials = 0;
  double crossover = 0.0;
  // Transmit random codewords instead of the zero word (linearity makes the
  // statistics codeword-independent; this double-checks that).
  bool random_codewords = false;
};

struct EquivalenceOptions {
  std::vector<Algorithm> decoders;
  // Test set used by TsGdda runs; MinRed measures the open question, the
  // default MinimalAll is the one with the completeness guarantee.
  TestSetKind testset = TestSetKind::MinimalAll;
  std::optional<SampledMode> sampled;  // absent = exhaustive over all 2^n words
  uint64_t seed = 0;
  unsigned exhaustive_cap = 20;        // max n for exhaustive mode
  unsigned enumeration_cap = kDefaultEnumerationCap;
  unsigned thread_count = 0;           // 0 = hardware concurrency
};

struct DecoderStats {
  std::string name;
  uint64_t trials = 0;
  uint64_t oracle_matches = 0;   // decoder distance equal to oracle distance
  uint64_t exact_recoveries = 0; // decoded codeword equal to transmitted one
  uint64_t total_steps = 0;
  uint64_t mismatches = 0;
  size_t testset_size = 0;       // 0 when not a test-set decoder
};

struct MismatchExample {
  std::string decoder;
  BitWord input;
  unsigned decoder_distance = 0;
  unsigned oracle_distance = 0;
};

struct ExperimentReport {
  std::string code_id;
  unsigned n = 0, k = 0;
  unsigned minimum_distance = 0;
  unsigned covering_radius = 0;
  std::string mode;           // "exhaustive" or "sampled"
  uint64_t trials = 0;
  double crossover = 0.0;
  uint64_t seed = 0;
  std::string rng_name;
  bool random_codewords = false;
  std::string testset;
  std::vector<DecoderStats> decoders;
  std::vector<MismatchExample> mismatch_examples;  // sorted, capped
  size_t mismatch_example_cap = 16;
};

// Runs every requested decoder against the brute-force oracle on either the
// whole input space or BSC-sampled trials.  Reports are deterministic given
// the seed: trial t draws from stream (seed, t) regardless of threading.
ExperimentReport run_equivalence(const BinaryCode& code, const std::string& code_id,
                                 const EquivalenceOptions& opts);

// Line-delimited key=value report; byte-identical across runs with one seed.
void write_report(std::ostream& out, const ExperimentReport& report);
void write_report_json(std::ostream& out, const ExperimentReport& report);

}  // namespace gdd
