// Enumeration and counting of the minimal specializations of a five-tuple.
//
// Applying the four reduction steps with multiplicities (k1,k2,k3,k4) —
// k1 times Qc4, k2 times P1, k3 times P2, k4 times Qc — is possible in some
// order without leaving the non-negative orthant iff
//
//   k1 <= a1,  k1+k2 <= b1,  k2+k3 <= r,  k3+k4 <= a2,  k4 <= b2,
//
// and the result (a1-k1, a2-k3-k4, b1-k1-k2, b2-k4, r-k2-k3) is minimal iff
// each of the four overlapping inequality pairs has at least one member
// tight.  Distinct maximal witnesses can reach the same tuple only in
// degenerate ways; enumeration deduplicates by result, keeping the
// lexicographically least witness.
#pragma once

#include <cstdint>
#include <vector>

#include "diamone/five_tuple.hpp"

namespace diamone {

/// Multiplicities (k1, k2, k3, k4) of (Qc4, P1, P2, Qc) applied to a tuple.
struct ReductionWitness {
  std::uint64_t k1 = 0;  // Qc4 count
  std::uint64_t k2 = 0;  // P1 count
  std::uint64_t k3 = 0;  // P2 count
  std::uint64_t k4 = 0;  // Qc count

  friend auto operator<=>(const ReductionWitness&,
                          const ReductionWitness&) = default;
};

/// Subtract the witness from the tuple; throws not_applicable_error when a
/// coordinate would go negative.
FiveTuple apply_witness(const FiveTuple& t, const ReductionWitness& w);

/// A minimal tuple reachable from some start tuple, with the witness that
/// reaches it.  `acm` records whether the target has trivial deficiency
/// module (r = 0): such components consist of arithmetically Cohen-Macaulay
/// curves.
struct MinimalSpecialization {
  FiveTuple tuple;
  ReductionWitness witness;
  bool acm = false;
};

/// All minimal tuples reachable from `t`, sorted by tuple, each with its
/// lexicographically least witness.  Work is bounded by the product of the
/// witness ranges (min(a1,b1)+1)(min(b1,r)+1)(min(r,a2)+1)(min(a2,b2)+1).
std::vector<MinimalSpecialization> enumerate_minimal(const FiveTuple& t);

/// Closed-form component counts: `buchsbaum` counts reachable minimal tuples
/// with r > 0, `acm` those with r = 0.  Matches enumerate_minimal sizes.
struct ComponentCount {
  std::uint64_t buchsbaum = 0;
  std::uint64_t acm = 0;

  std::uint64_t total() const { return buchsbaum + acm; }
  friend auto operator<=>(const ComponentCount&, const ComponentCount&) =
      default;
};

ComponentCount count_components(const FiveTuple& t);

}  // namespace diamone
