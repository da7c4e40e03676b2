#include "diamone/reduction.hpp"

#include <algorithm>
#include <map>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

namespace diamone {

FiveTuple apply_witness(const FiveTuple& t, const ReductionWitness& w) {
  using checked::add_u64;
  const std::uint64_t da1 = w.k1;
  const std::uint64_t da2 = add_u64(w.k3, w.k4);
  const std::uint64_t db1 = add_u64(w.k1, w.k2);
  const std::uint64_t db2 = w.k4;
  const std::uint64_t dr = add_u64(w.k2, w.k3);
  if (da1 > t.a1 || da2 > t.a2 || db1 > t.b1 || db2 > t.b2 || dr > t.r) {
    throw not_applicable_error("reduction witness exceeds tuple (" +
                               format_tuple(t) + ")");
  }
  return {t.a1 - da1, t.a2 - da2, t.b1 - db1, t.b2 - db2, t.r - dr};
}

namespace {

/// The witness is not extendable by any single further step, i.e. the
/// result tuple is minimal: each overlapping pair of the chain
/// k1<=a1, k1+k2<=b1, k2+k3<=r, k3+k4<=a2, k4<=b2 has a tight member.
bool witness_maximal(const FiveTuple& t, std::uint64_t k1, std::uint64_t k2,
                     std::uint64_t k3, std::uint64_t k4) {
  const bool t1 = (k1 == t.a1);
  const bool t2 = (k1 + k2 == t.b1);
  const bool t3 = (k2 + k3 == t.r);
  const bool t4 = (k3 + k4 == t.a2);
  const bool t5 = (k4 == t.b2);
  return (t1 || t2) && (t2 || t3) && (t3 || t4) && (t4 || t5);
}

}  // namespace

std::vector<MinimalSpecialization> enumerate_minimal(const FiveTuple& t) {
  // Iterating (k1,k2,k3,k4) in ascending lexicographic order means the
  // first witness recorded for a tuple is the lexicographically least.
  std::map<FiveTuple, ReductionWitness> found;
  const std::uint64_t k1_max = std::min(t.a1, t.b1);
  for (std::uint64_t k1 = 0; k1 <= k1_max; ++k1) {
    const std::uint64_t k2_max = std::min(t.b1 - k1, t.r);
    for (std::uint64_t k2 = 0; k2 <= k2_max; ++k2) {
      const std::uint64_t k3_max = std::min(t.r - k2, t.a2);
      for (std::uint64_t k3 = 0; k3 <= k3_max; ++k3) {
        const std::uint64_t k4_max = std::min(t.a2 - k3, t.b2);
        for (std::uint64_t k4 = 0; k4 <= k4_max; ++k4) {
          if (!witness_maximal(t, k1, k2, k3, k4)) continue;
          const ReductionWitness w{k1, k2, k3, k4};
          found.emplace(apply_witness(t, w), w);
        }
      }
    }
  }
  std::vector<MinimalSpecialization> out;
  out.reserve(found.size());
  for (const auto& [tuple, witness] : found) {
    out.push_back({tuple, witness, tuple.r == 0});
  }
  return out;
}

ComponentCount count_components(const FiveTuple& t) {
  using checked::binom2;
  using checked::i128;

  // Buchsbaum components (minimal targets with r > 0): inclusion-exclusion
  // over the witness polytope, with the clamped offsets
  //   a2^ = max(0, a2 - b2),  b1^ = max(0, b1 - a1).
  const i128 a1 = t.a1, a2 = t.a2, b1 = t.b1, b2 = t.b2, r = t.r;
  const i128 a2_hat = a2 > b2 ? a2 - b2 : 0;
  const i128 b1_hat = b1 > a1 ? b1 - a1 : 0;
  const i128 nb = binom2(r - b1_hat - a2_hat + 1) - binom2(r - b1 - a2_hat) -
                  binom2(r - b1_hat - a2) + binom2(r - b1 - a2 - 1);

  // ACM components (minimal targets with r = 0): the number of lattice
  // points (k2, k3) with k2 + k3 = r inside 0 <= k2 <= b1, 0 <= k3 <= a2.
  i128 ncm = 0;
  const i128 bmax = b1 > a2 ? b1 : a2;
  if (r <= bmax) {
    i128 m = b1 < a2 ? b1 : a2;
    if (r < m) m = r;
    ncm = m + 1;
  } else if (r <= b1 + a2) {
    ncm = b1 + a2 - r + 1;
  } else {
    ncm = 0;
  }

  return {checked::to_u64(nb, "count_components: buchsbaum count"),
          checked::to_u64(ncm, "count_components: acm count")};
}

}  // namespace diamone
