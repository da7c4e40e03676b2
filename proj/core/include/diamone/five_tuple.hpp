// Five-tuple calculus for space curves whose deficiency module lives in a
// single degree c.
//
// The tuple (a1, a2, b1, b2, r) records the only Betti numbers of such a
// curve that deformation theory can change without changing (degree, genus):
//
//   a1 = beta_{1,c+4}   generators in degree c+4
//   a2 = beta_{1,c}     generators in degree c
//   b1 = beta_{2,c+4}   syzygies in degree c+4
//   b2 = beta_{2,c}     syzygies in degree c
//   r  = beta_{3,c+4}   third syzygies (= dim of the deficiency module)
//
// A generization of the curve can cancel one of four kinds of "ghost" pairs;
// each cancellation subtracts a fixed vector from the tuple:
//
//   P1  = (0,0,1,0,1)   syzygy in degree c+4 against the module tail
//   P2  = (0,1,0,0,1)   generator in degree c against the module tail
//   Qc  = (0,1,0,1,0)   generator/syzygy pair in degree c
//   Qc4 = (1,0,1,0,0)   generator/syzygy pair in degree c+4
//
// Tuples reachable by such subtractions (staying componentwise non-negative)
// are exactly the generizations the Hilbert scheme admits; tuples admitting
// no further step are "minimal" and correspond to irreducible components.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace diamone {

struct FiveTuple {
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t b1 = 0;
  std::uint64_t b2 = 0;
  std::uint64_t r = 0;

  friend auto operator<=>(const FiveTuple&, const FiveTuple&) = default;
};

enum class ReductionStep { P1, P2, Qc, Qc4 };

inline constexpr std::array<ReductionStep, 4> kAllReductionSteps = {
    ReductionStep::P1, ReductionStep::P2, ReductionStep::Qc,
    ReductionStep::Qc4};

std::string to_string(ReductionStep step);

/// True when `step` can be subtracted from `t` without any coordinate going
/// negative.
bool applicable(const FiveTuple& t, ReductionStep step);

/// Subtract one application of `step`; throws not_applicable_error when
/// `applicable(t, step)` is false.
FiveTuple apply(const FiveTuple& t, ReductionStep step);

/// No reduction step applies: a1*b1 = b1*r = r*a2 = a2*b2 = 0.
bool is_minimal(const FiveTuple& t);

/// Obstructedness of the curve at such a tuple: for r >= 1 the curve is a
/// singular point of its Hilbert scheme iff a2*b1, a1*b1 or a2*b2 is
/// non-zero; curves with r = 0 (no deficiency module) are never obstructed.
bool is_obstructed(const FiveTuple& t);

/// Exactly one minimal tuple is reachable from `t`.  Holds iff each of the
/// triplets (a1,b1,r), (b1,r,a2), (r,a2,b2) — the triplets that admit two
/// competing reductions — satisfies x*y*z = 0 or y >= x+z.
bool has_unique_minimal(const FiveTuple& t);

/// Parse "a1,a2,b1,b2,r" (exactly five non-negative integers); throws
/// parse_error on malformed text.
FiveTuple parse_tuple(std::string_view text);

/// Inverse of parse_tuple: "a1,a2,b1,b2,r".
std::string format_tuple(const FiveTuple& t);

}  // namespace diamone
