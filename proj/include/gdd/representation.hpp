#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdd/bitword.hpp"
#include "gdd/code.hpp"

namespace gdd {

struct BuildOptions {
  // Refuse tables with n-k beyond this; 2^(n-k) rows is the honest cost of
  // the method and must fail loudly instead of thrashing.
  unsigned max_redundancy = 28;
  bool parallel_fill = true;
};

// Hard limit of the dense syndrome-indexed tables.
inline constexpr unsigned kAbsoluteMaxRedundancy = 32;

inline constexpr uint32_t kNoIndex = UINT32_MAX;

// The pair (N, phi): an ordered transversal of all 2^(n-k) cosets plus the
// full transition table.  leaders[0] is the zero word, the array is strictly
// increasing under the weight order, and each leader is the minimum of its
// coset, so index order is weight order.  phi[i*n + j] is the coset index of
// leaders[i] ^ e_{j+1}.
struct GroebnerRepresentation {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<uint64_t> leaders;
  std::vector<uint32_t> phi;
  // Dense map from packed syndrome value to coset index.  Filled when the
  // representation was built from (or attached to) a code; empty otherwise.
  std::vector<uint32_t> syndrome_index;
  std::optional<BinaryCode> code;

  size_t coset_count() const { return leaders.size(); }
  uint32_t phi_at(size_t i, unsigned j) const { return phi[i * n + j]; }
  BitWord leader(size_t i) const { return BitWord(leaders[i], n); }
  unsigned covering_radius() const {
    return static_cast<unsigned>(std::popcount(leaders.back()));
  }

  bool has_code() const { return code.has_value(); }
  const BinaryCode& attached_code() const;

  // Coset index by syndrome lookup; requires an attached code.
  uint32_t coset_index(BitWord w) const;
  uint32_t coset_index(Syndrome s) const;
  // Coset index by folding phi over the set bits of w from index 0 -- the
  // literal Forward step.  Needs no code.
  uint32_t forward_step(BitWord w) const;

  // Index of a word that is itself a leader, by binary search under the
  // weight order; kNoIndex if absent.
  uint32_t find_leader(uint64_t word_bits) const;

  friend bool operator==(const GroebnerRepresentation& a, const GroebnerRepresentation& b) {
    return a.n == b.n && a.k == b.k && a.leaders == b.leaders && a.phi == b.phi;
  }
};

// The pair (N*, phi*): per-coset leader weights plus the same transition
// table; the leader vectors themselves are discarded.
struct CompactRepresentation {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<uint8_t> weights;
  std::vector<uint32_t> phi;
  std::vector<uint32_t> syndrome_index;  // empty when no code was attached

  size_t coset_count() const { return weights.size(); }
  uint32_t phi_at(size_t i, unsigned j) const { return phi[i * n + j]; }
  unsigned covering_radius() const { return weights.back(); }

  bool has_syndrome_index() const { return !syndrome_index.empty(); }
  uint32_t coset_index(Syndrome s) const;
  uint32_t forward_step(BitWord w) const;

  friend bool operator==(const CompactRepresentation& a, const CompactRepresentation& b) {
    return a.n == b.n && a.k == b.k && a.weights == b.weights && a.phi == b.phi;
  }
};

// Two-phase construction: a priority-queue closure under the weight order
// discovers the leaders (FGLM-style), then the transition table is filled by
// syndrome lookup.
GroebnerRepresentation build_representation(const BinaryCode& code, const BuildOptions& opts = {});

CompactRepresentation compact(const GroebnerRepresentation& rep);

// Structural checks that need no code: header consistency, leader ordering,
// order-ideal closure, phi involution/commutativity, weight steps.
// Throws invariant_error with a description of the first violation.
void validate_intrinsic(const GroebnerRepresentation& rep);
void validate_intrinsic(const CompactRepresentation& rep);

// Attach a code to a loaded representation: verifies phi consistency against
// the code's syndromes and rebuilds the syndrome index.
void attach_code(GroebnerRepresentation& rep, const BinaryCode& code);
void attach_code(CompactRepresentation& rep, const BinaryCode& code);

using AnyRepresentation = std::variant<GroebnerRepresentation, CompactRepresentation>;

// Binary format "GREP" (see README): header, leaders or weights, phi table,
// trailing CRC32.  Round trips are bit-exact.
void serialize(const GroebnerRepresentation& rep, std::ostream& out);
void serialize(const CompactRepresentation& rep, std::ostream& out);
// Loads either flavor.  Unless trusted, intrinsic invariants are revalidated
// and a violation fails the load.
AnyRepresentation deserialize(std::istream& in, bool trusted = false);

void save_representation(const AnyRepresentation& rep, const std::string& path);
AnyRepresentation load_representation(const std::string& path, bool trusted = false);

}  // namespace gdd
