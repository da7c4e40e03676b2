#include "diamone/liaison.hpp"

#include <algorithm>
#include <utility>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

namespace diamone {

using checked::i128;

CIType make_ci(std::int64_t f, std::int64_t g) {
  if (f < 1 || g < 1) {
    throw no_such_ci_error("complete intersection degrees must be >= 1, got (" +
                           std::to_string(f) + "," + std::to_string(g) + ")");
  }
  if (f > g) std::swap(f, g);
  return {f, g};
}

std::int64_t link_c(std::int64_t c, const CIType& ci) {
  return checked::to_i64(static_cast<i128>(ci.f) + ci.g - 4 - c, "link_c");
}

DegreeGenus link_numerics(const DegreeGenus& dg, const CIType& ci) {
  const i128 f = ci.f, g = ci.g;
  const i128 d_new = f * g - dg.degree;
  const i128 delta = d_new - dg.degree;  // = fg - 2d, same parity as fg
  const i128 twice_increment = (f + g - 4) * delta;
  if (twice_increment % 2 != 0) {
    // (f+g-4)(fg-2d) is even for all integers f, g, d.
    throw arithmetic_error("link_numerics: genus increment not integral");
  }
  const i128 g_new = dg.genus + twice_increment / 2;
  return {checked::to_i64(d_new, "linked degree"),
          checked::to_i64(g_new, "linked genus")};
}

FiveTuple link_tuple(const FiveTuple& t) {
  return {t.b2, t.b1, t.a2, t.a1, t.r};
}

namespace {

std::uint64_t strand_at(const GradedStrand& strand, std::int64_t degree) {
  const auto it = strand.find(degree);
  return it == strand.end() ? 0 : it->second;
}

void add_to(GradedStrand& strand, std::int64_t degree, std::uint64_t count) {
  if (count == 0) return;
  strand[degree] = checked::add_u64(strand_at(strand, degree), count);
}

void remove_from(GradedStrand& strand, std::int64_t degree,
                 std::uint64_t count, const char* what) {
  if (count == 0) return;
  const std::uint64_t next =
      checked::sub_u64(strand_at(strand, degree), count, what);
  if (next == 0) {
    strand.erase(degree);
  } else {
    strand[degree] = next;
  }
}

}  // namespace

LinkResult link_table(const BettiTable& table, const CIType& ci) {
  const CIType t = make_ci(ci.f, ci.g);  // re-normalize defensively
  const auto profile = rao_profile(table);
  if (!profile) {
    throw no_such_ci_error(
        "table is ACM: the module-dualizing link construction needs a "
        "diameter-one profile");
  }
  const std::int64_t c = profile->c;
  const std::uint64_t r = profile->r;

  // The CI must exist inside the ideal: enough forms in each degree.
  const std::int64_t gamma_f = hilbert_function(table, t.f);
  const std::int64_t gamma_g = hilbert_function(table, t.g);
  if (gamma_f < 1 || gamma_g < 1 || (t.f == t.g && gamma_f < 2)) {
    throw no_such_ci_error("no complete intersection of type (" +
                           std::to_string(t.f) + "," + std::to_string(t.g) +
                           ") inside the ideal: h^0 gives " +
                           std::to_string(gamma_f) + " and " +
                           std::to_string(gamma_g) + " forms");
  }

  const std::int64_t s = checked::to_i64(static_cast<i128>(t.f) + t.g,
                                         "link degree sum");
  const std::int64_t cd = link_c(c, t);
  const std::uint64_t four_r = checked::mul_u64(4, r);
  const std::uint64_t six_r = checked::mul_u64(6, r);

  // Split the syzygy strand into the module's Koszul block (4r in degree
  // c+3, guaranteed by the profile) and the free part F2.
  GradedStrand f2 = table.beta2;
  remove_from(f2, c + 3, four_r, "link_table koszul split");
  const GradedStrand& f1 = table.beta1;

  // Mapping cone of the dualized resolution over the CI's Koszul complex:
  // the module contributes its own dual blocks, the free parts reflect
  // through degree s = f + g, and the CI adds its two generators.
  BettiTable out;
  out.beta3[cd + 4] = r;
  add_to(out.beta2, cd + 3, four_r);
  for (const auto& [i, mult] : f1) add_to(out.beta2, s - i, mult);
  add_to(out.beta1, cd + 2, six_r);
  for (const auto& [i, mult] : f2) add_to(out.beta1, s - i, mult);
  add_to(out.beta1, t.f, 1);
  add_to(out.beta1, t.g, 1);

  // Certified cancellation 1: a CI generator of degree f is redundant iff
  // the source ideal has a minimal generator of degree g (its reflection
  // lands exactly on R(-f)), and symmetrically.
  if (t.f == t.g) {
    const std::uint64_t k =
        std::min<std::uint64_t>(2, strand_at(f1, t.f));
    remove_from(out.beta1, t.f, k, "link_table CI cancellation");
    remove_from(out.beta2, t.f, k, "link_table CI cancellation");
  } else {
    if (strand_at(f1, t.g) > 0) {
      remove_from(out.beta1, t.f, 1, "link_table CI cancellation");
      remove_from(out.beta2, t.f, 1, "link_table CI cancellation");
    }
    if (strand_at(f1, t.f) > 0) {
      remove_from(out.beta1, t.g, 1, "link_table CI cancellation");
      remove_from(out.beta2, t.g, 1, "link_table CI cancellation");
    }
  }

  // Certified cancellation 2: in degree c(D)+2 the module's 6r block meets
  // the reflected generators head on; every such pair cancels, up to the
  // block's capacity.
  const std::uint64_t k2 =
      std::min<std::uint64_t>(strand_at(out.beta2, cd + 2), six_r);
  remove_from(out.beta1, cd + 2, k2, "link_table block cancellation");
  remove_from(out.beta2, cd + 2, k2, "link_table block cancellation");

  validate(out);

  LinkResult result;
  result.c = cd;
  result.numerics = link_numerics(degree_genus(table), t);
  if (degree_genus(out) != result.numerics) {
    throw error("link_table: assembled table disagrees with the numerical "
                "linkage invariants (internal inconsistency)");
  }

  // Pinned minimal iff no cancellable generator/syzygy pair remains in any
  // degree, treating the module's 4r block in degree c(D)+3 as protected.
  bool minimal = true;
  for (const auto& [deg, mult] : out.beta1) {
    std::uint64_t opposite = strand_at(out.beta2, deg);
    if (deg == cd + 3) opposite -= std::min(opposite, four_r);
    if (mult > 0 && opposite > 0) {
      minimal = false;
      break;
    }
  }
  result.minimal = minimal;
  result.table = std::move(out);
  return result;
}

}  // namespace diamone
