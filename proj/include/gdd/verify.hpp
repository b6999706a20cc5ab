#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdd/border.hpp"
#include "gdd/code.hpp"
#include "gdd/representation.hpp"

namespace gdd {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned exhaustive_cap = 16;  // max n for 2^n sweeps
  unsigned enumeration_cap = kDefaultEnumerationCap;
  unsigned thread_count = 0;
};

// Brute-force minimum of every coset: out[s] is the weight-order minimum of
// {w : syndrome(w) = s} over all 2^n words.
std::vector<uint64_t> bruteforce_coset_minima(const BinaryCode& code, unsigned exhaustive_cap = 16);

// The named checks, each independently runnable.  Every function scans the
// whole relevant space (2^n words, all table entries, all syndromes).
CheckResult check_transversal_leaders(const BinaryCode& code, const GroebnerRepresentation& rep,
                                      const VerifyOptions& opts = {});
CheckResult check_order_ideal_closure(const GroebnerRepresentation& rep);
CheckResult check_phi_consistency(const BinaryCode& code, const GroebnerRepresentation& rep);
CheckResult check_border_equivalence(const BinaryCode& code, const GroebnerRepresentation& rep);
CheckResult check_reduced_border_conditions(const GroebnerRepresentation& rep);
CheckResult check_proposition1(const BinaryCode& code, const GroebnerRepresentation& rep,
                               const VerifyOptions& opts = {});
// Exhaustive decoding sweep: l/reduction/compact vs oracle distance and
// codeword identity; the forward-step routes must agree with syndromes.
CheckResult check_complete_decoding(const BinaryCode& code, const GroebnerRepresentation& rep,
                                    const VerifyOptions& opts = {});
CheckResult check_ts_minimal_complete(const BinaryCode& code, const GroebnerRepresentation& rep,
                                      const VerifyOptions& opts = {});
// Measured, not asserted: mismatch count of ts-descent with the reduced test
// set; pass reflects "measurement ran", detail carries the count.
CheckResult check_ts_minred_measured(const BinaryCode& code, const GroebnerRepresentation& rep,
                                     const VerifyOptions& opts = {});
CheckResult check_unique_decoding(const BinaryCode& code, const GroebnerRepresentation& rep,
                                  const VerifyOptions& opts = {});
CheckResult check_ip_cwp(const BinaryCode& code, const GroebnerRepresentation& rep,
                         const VerifyOptions& opts = {});
CheckResult check_serialization_roundtrip(const GroebnerRepresentation& rep);

// The whole battery for one code.
std::vector<CheckResult> verify_code(const BinaryCode& code, const VerifyOptions& opts = {});

// ts-minred mismatch count alone (acceptance reporting).
uint64_t ts_minred_mismatch_count(const BinaryCode& code, const GroebnerRepresentation& rep,
                                  const VerifyOptions& opts = {});

}  // namespace gdd
