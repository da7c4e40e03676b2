// Generization moves at full Betti-table resolution.
//
// Two kinds of moves realize, at table level, the tuple-calculus steps:
//
//  * apply_qi cancels one generator/syzygy ghost pair in a single degree i
//    (the table-level form of Qc / Qc4 when i is c or c+4, and a plain
//    ghost-pair removal elsewhere);
//  * apply_pq performs the module-killing deformation that removes p1
//    syzygy-vs-module pairs and p2 generator-vs-module pairs at once,
//    rippling the Koszul block of the deficiency module through degrees
//    c..c+4.
//
// Both preserve (degree, genus); apply_qi preserves the Hilbert function
// everywhere, apply_pq lowers it by exactly p2 in degree c and nowhere
// else.  Every output is semicontinuity-compatible with its input.
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "diamone/betti_table.hpp"

namespace diamone {

/// Cancel one ghost pair in degree i: requires beta1[i] >= 1 and
/// beta2[i] > K(i), where K(i) = 4r when the table has a diameter-one
/// profile and i = c+3 (the Koszul block of the deficiency module is not
/// cancellable) and K(i) = 0 otherwise.  Throws not_applicable_error.
BettiTable apply_qi(const BettiTable& table, std::int64_t i);

/// Module-killing deformation on a diameter-one table: remove p1 pairs
/// (syzygy in degree c+4 vs module) and p2 pairs (generator in degree c vs
/// module).  Requires p1 <= beta2[c+4], p2 <= beta1[c], p1 + p2 <= r.
/// When p1 + p2 = r the result is ACM.  Throws not_diameter_one_error on
/// ACM input and not_applicable_error when the bounds fail.
BettiTable apply_pq(const BettiTable& table, std::uint64_t p1,
                    std::uint64_t p2);

/// A batch of moves: ghost-pair cancellations by degree (with counts),
/// then one apply_pq.  Applied as: qi moves in ascending degree, each with
/// its count, then apply_pq(p1, p2) when p1 + p2 > 0.
struct GenerizationPlan {
  std::map<std::int64_t, std::uint64_t> qi;  // degree -> cancellation count
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
};

struct GenerizationOutcome {
  BettiTable table;
  /// Profile degree c of the *input* (the degree the moves acted around);
  /// set whenever the input had a diameter-one profile.  When the plan
  /// kills the whole module (p1 + p2 = r) the output is ACM and this field
  /// records where its module used to live.
  std::optional<std::int64_t> source_c;
};

GenerizationOutcome apply_plan(const BettiTable& table,
                               const GenerizationPlan& plan);

/// The tuple-level shadow of a plan agrees with the table-level result:
/// five-tuples read at the same degree c satisfy
///   five_tuple(after) = five_tuple(before) - p1*P1 - p2*P2
///                       - qi[c]*Qc - qi[c+4]*Qc4.
bool tuple_consistency(const BettiTable& before, const GenerizationPlan& plan,
                       const BettiTable& after, std::int64_t c);

/// Semicontinuity of graded Betti numbers under generization, away from
/// the degrees c+1, c+2, c+3 where the Koszul block of the dying module
/// moves multiplicities around: true iff
///   beta1/beta2 of `after` are <= those of `before` in every degree
///   outside {c+1, c+2, c+3}, and beta3[c+4](after) <= beta3[c+4](before).
bool semicontinuity_check(const BettiTable& before, const BettiTable& after,
                          std::int64_t c);

}  // namespace diamone
