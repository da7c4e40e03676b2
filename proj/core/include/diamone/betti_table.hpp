// Graded Betti tables of curves in projective 3-space.
//
// A table records the three strands of a graded free resolution of the
// curve's homogeneous ideal,
//
//   0 -> (+) R(-i)^{beta3[i]} -> (+) R(-i)^{beta2[i]} -> (+) R(-i)^{beta1[i]}
//     -> I(C) -> 0,
//
// as maps degree -> multiplicity.  Tables are kept canonical: zero
// multiplicities are never stored.  The JSON wire form is
//   {"beta1":{"4":3,"2":1},"beta2":{"5":4},"beta3":{"6":1}}
// with degrees as decimal string keys.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "diamone/five_tuple.hpp"

namespace diamone {

/// One strand: degree -> multiplicity, canonical (no zero entries).
using GradedStrand = std::map<std::int64_t, std::uint64_t>;

struct BettiTable {
  GradedStrand beta1;
  GradedStrand beta2;
  GradedStrand beta3;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Total rank of a strand (sum of multiplicities, overflow-checked).
std::uint64_t strand_rank(const GradedStrand& strand);

/// Remove zero entries in place (parsing already does this; exposed for
/// callers that assemble tables by hand).
void canonicalize(BettiTable& table);

/// Structural validation; throws parse_error on violation.  Checks: the
/// table is canonical, the alternating rank sum rank(beta1) - rank(beta2)
/// + rank(beta3) equals 1, and every third-syzygy degree is >= the minimum
/// syzygy degree (a third syzygy needs a syzygy to map to).
void validate(const BettiTable& table);

/// Parse and validate the JSON wire form; throws parse_error.
BettiTable table_from_json(std::string_view json_text);

/// Canonical serialization: compact JSON, all three strands present, keys
/// in lexicographic order.  Parsing the output reproduces the table, and
/// serializing a parsed-then-reserialized table is byte-stable.
std::string table_to_json(const BettiTable& table);

/// Shape of the deficiency (Hartshorne-Rao) module read off the table.
/// The module is concentrated in degree c with dimension r.
struct RaoProfile {
  std::int64_t c = 0;
  std::uint64_t r = 0;  // >= 1

  friend bool operator==(const RaoProfile&, const RaoProfile&) = default;
};

/// Classify the table: a diameter-one profile {c, r} when the third strand
/// is a single degree c+4 with the Koszul block beta2[c+3] >= 4r present;
/// nullopt when the third strand is empty (arithmetically Cohen-Macaulay,
/// no deficiency module).  Any other shape throws not_diameter_one_error.
std::optional<RaoProfile> rao_profile(const BettiTable& table);

/// The five-tuple of the table read at degree c: (beta1[c+4], beta1[c],
/// beta2[c+4], beta2[c], beta3[c+4]).
FiveTuple five_tuple_at(const BettiTable& table, std::int64_t c);

/// five_tuple_at at the table's own profile degree; throws
/// not_diameter_one_error when the table is ACM (no intrinsic c).
FiveTuple five_tuple(const BettiTable& table);

/// Hilbert function of the ideal computed from the resolution:
///   gamma(v) = sum_i (beta1[i] - beta2[i] + beta3[i]) * binom(v-i+3, 3).
/// Non-negative for tables of actual ideals; the formula itself is exact
/// for any table.
std::int64_t hilbert_function(const BettiTable& table, std::int64_t v);

struct DegreeGenus {
  std::int64_t degree = 0;
  std::int64_t genus = 0;

  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

/// Solve binom(v+3,3) - gamma(v) = d*v + 1 - g for (d, g) past the top of
/// the support and verify linearity at a third point; throws parse_error
/// when the table's Hilbert polynomial is not that of a curve.
DegreeGenus degree_genus(const BettiTable& table);

/// Speciality sigma(v) = h^1 of the twisted structure sheaf, from Euler
/// characteristic bookkeeping (valid for v >= -3):
///   sigma(v) = binom(v+3,3) - (d*v + 1 - g) - gamma(v) + rho(v),
/// where rho(v) = r when the table has a diameter-one profile with c = v,
/// else 0.
std::int64_t speciality(const BettiTable& table, std::int64_t v);

}  // namespace diamone
