#pragma once

#include <cstdint>
#include <vector>

#include "gdd/bitword.hpp"
#include "gdd/code.hpp"
#include "gdd/representation.hpp"

namespace gdd {

// One-step departure from the transversal paired with its coset leader:
// head = leader ^ e_j outside N, tail = the leader of head's coset.  Both
// components share a syndrome, so head ^ tail is a codeword.
struct BorderElement {
  BitWord head;
  BitWord tail;

  friend bool operator==(const BorderElement&, const BorderElement&) = default;
};

// Canonical order: sorted by (head, tail) raw bits, deduplicated.
using Border = std::vector<BorderElement>;

// The border read off the transition table: {(leaders[i] ^ e_j,
// leaders[phi[i][j]])} minus diagonal pairs.
Border border_from_phi(const GroebnerRepresentation& rep);

// The literal defining scan: all (n1, i, n2) with n1, n2 in the transversal
// and H*(n1 ^ e_i) = H*n2, n1 ^ e_i != n2.  Brute-force oracle; guarded by
// max_ops (triple-scan cost).
Border border_by_definition(const BinaryCode& code, const std::vector<uint64_t>& transversal,
                            uint64_t max_ops = uint64_t{1} << 28);

// Keep exactly the elements whose heads are support-minimal among all border
// heads.  The result satisfies both reduced-border conditions; callers verify
// them with verify_reduced_border rather than trusting the construction.
Border reduce_border(const Border& full);

// Condition 1: every full-border head dominates some reduced head.
// Condition 2: reduced heads are pairwise support-incomparable.
bool verify_reduced_border(const Border& reduced, const Border& full);

enum class TestSetKind { MinimalAll, MinRed, Custom };

// Nonzero codewords used for test-set descent.
struct TestSet {
  std::vector<BitWord> words;  // sorted under the weight order, no duplicates
  TestSetKind kind = TestSetKind::Custom;
};

// {head ^ tail : b in reduced}, deduplicated.
TestSet min_red(const Border& reduced);

// All nonzero codewords whose supports contain no other nonzero codeword's
// support.  Enumerates 2^k codewords; guarded by max_dimension.
TestSet minimal_codewords_bruteforce(const BinaryCode& code,
                                     unsigned max_dimension = kDefaultEnumerationCap);

struct Proposition1Report {
  bool contained = false;            // Min_red subset of M_C
  std::vector<BitWord> violations;   // members of Min_red outside M_C
  size_t reduced_border_size = 0;
  size_t min_red_size = 0;           // after deduplication
  size_t duplicate_elements = 0;     // reduced elements beyond the first per codeword
  size_t minimal_codeword_count = 0;
};

// Computes Min_red and the brute-force minimal-codeword set and reports the
// containment; violations are data, not exceptions.
Proposition1Report verify_proposition1(const BinaryCode& code, const GroebnerRepresentation& rep,
                                       unsigned max_dimension = kDefaultEnumerationCap);

void write_border(std::ostream& out, const Border& border);
void write_testset(std::ostream& out, const TestSet& set);
TestSet read_testset(std::istream& in, const BinaryCode& code);

}  // namespace gdd
