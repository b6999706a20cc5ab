#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdd/bitword.hpp"
#include "gdd/border.hpp"
#include "gdd/code.hpp"
#include "gdd/representation.hpp"

namespace gdd {

struct DecodeStep {
  // Unit vector flipped (descent decoders) or test-set word applied.
  BitWord applied;
  // Leader weight of the current coset after the step (descent), or wt(r)
  // after the step (test-set descent).
  unsigned weight_after = 0;
};

struct DecodeResult {
  BitWord codeword;          // the returned c
  BitWord error;             // r ^ c
  unsigned distance = 0;     // wt(error)
  bool unique = false;       // see decoder contracts
  std::vector<DecodeStep> steps;
};

// Ground-truth oracle: scan all 2^k codewords for the minimum distance.
// Ties are resolved toward the smallest error under the weight order and
// unique is set iff exactly one codeword attains the minimum.
DecodeResult ml_bruteforce(const BinaryCode& code, BitWord r,
                           unsigned max_dimension = kDefaultEnumerationCap);

// Coset-leader gradient descent on the compact table: from the coset of r,
// repeatedly flip the lowest position whose transition drops the leader
// weight by one, until the zero coset.  distance always equals the leader
// weight of r's coset.  When packing_radius is given, unique is set from
// distance <= packing_radius.
DecodeResult l_gdda(const CompactRepresentation& rep, BitWord r,
                    std::optional<unsigned> packing_radius = {});

// Test-set descent: apply the test word with maximal weight drop (ties to
// the order-smallest word) until no word drops the weight.
DecodeResult ts_gdda(const TestSet& testset, BitWord r,
                     std::optional<unsigned> packing_radius = {});

// Forward fold over the set bits of r, then the same strict descent with
// leader vectors tracked through the full table.
DecodeResult reduction_gdda(const GroebnerRepresentation& rep, BitWord r,
                            std::optional<unsigned> packing_radius = {});

// Forward fold to (l, w_l) on the compact table, then the same descent;
// identical output to l_gdda by construction.
DecodeResult compact_reduction_gdda(const CompactRepresentation& rep, BitWord r,
                                    std::optional<unsigned> packing_radius = {});

// Does the coset of syndrome s contain a word of weight <= t?
bool cwp_query(const CompactRepresentation& rep, Syndrome s, unsigned t);

// min{ 1*u : u in {0,1}^n, H u = b mod 2 }.  Over F_2 a 0/1 optimum always
// exists: doubling any coordinate cancels mod 2 and only adds cost, so the
// coset leader solves the program.
struct IpSolution {
  unsigned value = 0;
  BitWord solution;
};
IpSolution ip_solve(const GroebnerRepresentation& rep, Syndrome b);
IpSolution ip_solve(const CompactRepresentation& rep, Syndrome b);

// Maximum leader weight / minimum nonzero codeword weight.
unsigned covering_radius(const CompactRepresentation& rep);
unsigned minimum_distance(const BinaryCode& code, unsigned max_dimension = kDefaultEnumerationCap);

inline unsigned packing_radius_from_distance(unsigned d) { return (d - 1) / 2; }

}  // namespace gdd
