// Liaison (linkage) of diameter-one curves through complete intersections.
//
// Linking a curve C through a complete intersection of two surfaces of
// degrees f and g produces a residual curve D with
//
//   d' = f*g - d,   g' = g_a + ((f+g-4)/2) * (d' - d),
//
// dualized deficiency module (same dimension r, concentrated in degree
// c(D) = f+g-4-c), and a resolution assembled from the dual of C's
// resolution and the Koszul resolution of the CI.  link_table performs that
// assembly, carries out the cancellations the construction certifies, and
// reports whether the result is pinned minimal.
#pragma once

#include <cstdint>

#include "diamone/betti_table.hpp"

namespace diamone {

/// Complete intersection of surfaces of degrees f <= g (normalized).
struct CIType {
  std::int64_t f = 0;
  std::int64_t g = 0;

  friend bool operator==(const CIType&, const CIType&) = default;
};

/// Normalize so f <= g; throws no_such_ci_error for degrees < 1.
CIType make_ci(std::int64_t f, std::int64_t g);

/// Degree of the residual module: c(D) = f + g - 4 - c.
std::int64_t link_c(std::int64_t c, const CIType& ci);

/// (d, g) of the residual curve.  The genus increment
/// (f+g-4)(d'-d)/2 is always an integer; overflow-checked.
DegreeGenus link_numerics(const DegreeGenus& dg, const CIType& ci);

/// Five-tuple of the residual curve when the CI degrees avoid the tuple's
/// own critical degrees: duality reverses the four outer entries,
///   (a1, a2, b1, b2, r) -> (b2, b1, a2, a1, r).
FiveTuple link_tuple(const FiveTuple& t);

struct LinkResult {
  BettiTable table;
  std::int64_t c = 0;       // profile degree of the residual curve
  DegreeGenus numerics;     // (d', g')
  /// No cancellable generator/syzygy pair is left in the output (the
  /// protected Koszul block at c+3 excluded): the table is pinned as the
  /// minimal resolution of the residual curve.
  bool minimal = false;
};

/// Link a diameter-one table through a CI of type (f, g).  Requires the
/// table to contain a CI of that type: gamma(f) >= 1 and gamma(g) >= 1
/// (>= 2 when f = g).  ACM input or unattainable degrees throw
/// no_such_ci_error.
LinkResult link_table(const BettiTable& table, const CIType& ci);

}  // namespace diamone
