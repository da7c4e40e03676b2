#include "diamone/table_ops.hpp"

#include <algorithm>
#include <set>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

namespace diamone {
namespace {

using checked::i128;

std::uint64_t strand_at(const GradedStrand& strand, std::int64_t degree) {
  const auto it = strand.find(degree);
  return it == strand.end() ? 0 : it->second;
}

/// Add delta (possibly negative) to strand[degree], erasing the entry when
/// it reaches zero; going negative means a move precondition was violated.
void bump(GradedStrand& strand, std::int64_t degree, i128 delta,
          const char* what) {
  if (delta == 0) return;
  const i128 next = static_cast<i128>(strand_at(strand, degree)) + delta;
  if (next < 0) {
    throw not_applicable_error(std::string(what) + ": multiplicity in degree " +
                               std::to_string(degree) + " would go negative");
  }
  if (next == 0) {
    strand.erase(degree);
  } else {
    strand[degree] = checked::to_u64(next, what);
  }
}

}  // namespace

BettiTable apply_qi(const BettiTable& table, std::int64_t i) {
  const auto profile = rao_profile(table);  // validates diameter-one shape
  const std::uint64_t generators = strand_at(table.beta1, i);
  if (generators == 0) {
    throw not_applicable_error("apply_qi: no generator in degree " +
                               std::to_string(i) + " to cancel");
  }
  std::uint64_t protected_block = 0;
  if (profile && i == profile->c + 3) {
    protected_block = checked::mul_u64(4, profile->r);
  }
  const std::uint64_t syzygies = strand_at(table.beta2, i);
  if (syzygies <= protected_block) {
    throw not_applicable_error(
        "apply_qi: degree " + std::to_string(i) + " has " +
        std::to_string(syzygies) + " syzygies of which " +
        std::to_string(protected_block) +
        " form the protected Koszul block; no cancellable pair");
  }
  BettiTable out = table;
  bump(out.beta1, i, -1, "apply_qi");
  bump(out.beta2, i, -1, "apply_qi");
  return out;
}

BettiTable apply_pq(const BettiTable& table, std::uint64_t p1,
                    std::uint64_t p2) {
  const auto profile = rao_profile(table);
  if (!profile) {
    throw not_diameter_one_error(
        "apply_pq: table is ACM, there is no module to deform against");
  }
  const std::int64_t c = profile->c;
  const std::uint64_t r = profile->r;
  if (p1 > strand_at(table.beta2, c + 4)) {
    throw not_applicable_error("apply_pq: p1 = " + std::to_string(p1) +
                               " exceeds the " +
                               std::to_string(strand_at(table.beta2, c + 4)) +
                               " syzygies in degree c+4");
  }
  if (p2 > strand_at(table.beta1, c)) {
    throw not_applicable_error("apply_pq: p2 = " + std::to_string(p2) +
                               " exceeds the " +
                               std::to_string(strand_at(table.beta1, c)) +
                               " generators in degree c");
  }
  if (checked::add_u64(p1, p2) > r) {
    throw not_applicable_error("apply_pq: p1 + p2 = " +
                               std::to_string(p1 + p2) + " exceeds r = " +
                               std::to_string(r));
  }

  BettiTable out = table;
  const i128 P1 = p1, P2 = p2;

  // Degree c+4: p1 syzygies and the whole of p1+p2 of the module tail die.
  bump(out.beta2, c + 4, -P1, "apply_pq beta2[c+4]");
  bump(out.beta3, c + 4, -(P1 + P2), "apply_pq beta3");

  // Degree c+3: each dead tail drags 4 Koszul syzygies; they cancel
  // against generators there while any are left.
  const i128 m43 = std::min<i128>(4 * P1, strand_at(table.beta1, c + 3));
  bump(out.beta1, c + 3, -m43, "apply_pq beta1[c+3]");
  bump(out.beta2, c + 3, -(4 * P2 + m43), "apply_pq beta2[c+3]");

  // Degree c+2: 6*p2 Koszul syzygies surface; they cancel against
  // generators first, the surplus lands as new syzygies.
  const i128 m62 = std::min<i128>(6 * P2, strand_at(table.beta1, c + 2));
  bump(out.beta1, c + 2, -m62, "apply_pq beta1[c+2]");
  bump(out.beta2, c + 2, 6 * P2 - m62, "apply_pq beta2[c+2]");

  // Degree c+1: 4*p2 Koszul relations surface as generators, cancelling
  // against syzygies first.
  const i128 m41 = std::min<i128>(4 * P2, strand_at(table.beta2, c + 1));
  bump(out.beta1, c + 1, 4 * P2 - m41, "apply_pq beta1[c+1]");
  bump(out.beta2, c + 1, -m41, "apply_pq beta2[c+1]");

  // Degree c: p2 generators die against the module.
  bump(out.beta1, c, -P2, "apply_pq beta1[c]");

  return out;
}

GenerizationOutcome apply_plan(const BettiTable& table,
                               const GenerizationPlan& plan) {
  GenerizationOutcome outcome;
  const auto profile = rao_profile(table);
  if (profile) outcome.source_c = profile->c;

  BettiTable current = table;
  for (const auto& [degree, count] : plan.qi) {  // ascending degree
    for (std::uint64_t n = 0; n < count; ++n) {
      current = apply_qi(current, degree);
    }
  }
  if (plan.p1 > 0 || plan.p2 > 0) {
    current = apply_pq(current, plan.p1, plan.p2);
  }
  outcome.table = std::move(current);
  return outcome;
}

bool tuple_consistency(const BettiTable& before, const GenerizationPlan& plan,
                       const BettiTable& after, std::int64_t c) {
  FiveTuple expected = five_tuple_at(before, c);
  const auto reduce = [&](ReductionStep step, std::uint64_t times) {
    for (std::uint64_t n = 0; n < times; ++n) {
      if (!applicable(expected, step)) return false;
      expected = apply(expected, step);
    }
    return true;
  };
  if (!reduce(ReductionStep::P1, plan.p1)) return false;
  if (!reduce(ReductionStep::P2, plan.p2)) return false;
  const auto qi_count = [&](std::int64_t degree) {
    const auto it = plan.qi.find(degree);
    return it == plan.qi.end() ? std::uint64_t{0} : it->second;
  };
  if (!reduce(ReductionStep::Qc, qi_count(c))) return false;
  if (!reduce(ReductionStep::Qc4, qi_count(c + 4))) return false;
  return five_tuple_at(after, c) == expected;
}

bool semicontinuity_check(const BettiTable& before, const BettiTable& after,
                          std::int64_t c) {
  const auto strand_ok = [&](const GradedStrand& b, const GradedStrand& a) {
    std::set<std::int64_t> degrees;
    for (const auto& [deg, mult] : b) degrees.insert(deg);
    for (const auto& [deg, mult] : a) degrees.insert(deg);
    for (const std::int64_t deg : degrees) {
      if (deg >= c + 1 && deg <= c + 3) continue;  // Koszul traffic window
      if (strand_at(a, deg) > strand_at(b, deg)) return false;
    }
    return true;
  };
  if (!strand_ok(before.beta1, after.beta1)) return false;
  if (!strand_ok(before.beta2, after.beta2)) return false;
  return strand_at(after.beta3, c + 4) <= strand_at(before.beta3, c + 4);
}

}  // namespace diamone
