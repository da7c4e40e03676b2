#include "diamone/betti_table.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include <json.hpp>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

namespace diamone {

using nlohmann::json;

std::uint64_t strand_rank(const GradedStrand& strand) {
  std::uint64_t total = 0;
  for (const auto& [deg, mult] : strand) total = checked::add_u64(total, mult);
  return total;
}

void canonicalize(BettiTable& table) {
  for (GradedStrand* strand : {&table.beta1, &table.beta2, &table.beta3}) {
    for (auto it = strand->begin(); it != strand->end();) {
      it = it->second == 0 ? strand->erase(it) : std::next(it);
    }
  }
}

void validate(const BettiTable& table) {
  for (const GradedStrand* strand :
       {&table.beta1, &table.beta2, &table.beta3}) {
    for (const auto& [deg, mult] : *strand) {
      if (mult == 0) {
        throw parse_error("betti table not canonical: zero multiplicity in "
                          "degree " +
                          std::to_string(deg));
      }
    }
  }
  const checked::i128 rank_sum = static_cast<checked::i128>(
                                     strand_rank(table.beta1)) -
                                 strand_rank(table.beta2) +
                                 strand_rank(table.beta3);
  if (rank_sum != 1) {
    throw parse_error(
        "betti table: alternating rank sum must be 1 (resolution of an "
        "ideal sheaf), got " +
        checked::i128_to_string(rank_sum));
  }
  if (!table.beta3.empty()) {
    if (table.beta2.empty()) {
      throw parse_error(
          "betti table: third syzygies present but no syzygies to map to");
    }
    const std::int64_t min_b2 = table.beta2.begin()->first;
    const std::int64_t min_b3 = table.beta3.begin()->first;
    if (min_b3 < min_b2) {
      throw parse_error("betti table: third syzygy in degree " +
                        std::to_string(min_b3) +
                        " below minimum syzygy degree " +
                        std::to_string(min_b2));
    }
  }
}

namespace {

GradedStrand strand_from_json(const json& j, const char* name) {
  if (!j.is_object()) {
    throw parse_error(std::string("betti table: '") + name +
                      "' must be an object of degree -> multiplicity");
  }
  GradedStrand strand;
  for (const auto& [key, value] : j.items()) {
    std::int64_t degree = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, degree);
    if (ec != std::errc{} || ptr != last || key.empty()) {
      throw parse_error(std::string("betti table: '") + name +
                        "' has non-integer degree key '" + key + "'");
    }
    if (!value.is_number_unsigned()) {
      throw parse_error(std::string("betti table: '") + name + "' degree " +
                        key + " has non-integer or negative multiplicity");
    }
    const std::uint64_t mult = value.get<std::uint64_t>();
    if (mult == 0) continue;  // canonical form drops explicit zeros
    if (!strand.emplace(degree, mult).second) {
      // Distinct string keys can denote the same integer ("07" vs "7").
      throw parse_error(std::string("betti table: '") + name +
                        "' lists degree " + std::to_string(degree) +
                        " twice");
    }
  }
  return strand;
}

}  // namespace

BettiTable table_from_json(std::string_view json_text) {
  json j = json::parse(json_text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw parse_error("betti table: input is not valid JSON");
  }
  if (!j.is_object()) {
    throw parse_error("betti table: top level must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "beta1" && key != "beta2" && key != "beta3") {
      throw parse_error("betti table: unknown key '" + key + "'");
    }
  }
  BettiTable table;
  if (j.contains("beta1")) table.beta1 = strand_from_json(j["beta1"], "beta1");
  if (j.contains("beta2")) table.beta2 = strand_from_json(j["beta2"], "beta2");
  if (j.contains("beta3")) table.beta3 = strand_from_json(j["beta3"], "beta3");
  validate(table);
  return table;
}

namespace {

json strand_to_json(const GradedStrand& strand) {
  json j = json::object();
  for (const auto& [deg, mult] : strand) j[std::to_string(deg)] = mult;
  return j;
}

}  // namespace

std::string table_to_json(const BettiTable& table) {
  json j;
  j["beta1"] = strand_to_json(table.beta1);
  j["beta2"] = strand_to_json(table.beta2);
  j["beta3"] = strand_to_json(table.beta3);
  return j.dump();
}

std::optional<RaoProfile> rao_profile(const BettiTable& table) {
  if (table.beta3.empty()) return std::nullopt;  // ACM
  if (table.beta3.size() > 1) {
    throw not_diameter_one_error(
        "third syzygies in " + std::to_string(table.beta3.size()) +
        " distinct degrees: deficiency module has diameter > 1");
  }
  const auto [e, r] = *table.beta3.begin();
  const std::int64_t c = e - 4;
  const auto koszul = table.beta2.find(c + 3);
  const std::uint64_t available = koszul == table.beta2.end() ? 0
                                                              : koszul->second;
  const std::uint64_t needed = checked::mul_u64(4, r);
  if (available < needed) {
    throw not_diameter_one_error(
        "syzygy block in degree " + std::to_string(c + 3) + " has " +
        std::to_string(available) + " < 4r = " + std::to_string(needed) +
        " entries: not the Koszul shape of a diameter-one module");
  }
  return RaoProfile{c, r};
}

namespace {

std::uint64_t strand_at(const GradedStrand& strand, std::int64_t degree) {
  const auto it = strand.find(degree);
  return it == strand.end() ? 0 : it->second;
}

}  // namespace

FiveTuple five_tuple_at(const BettiTable& table, std::int64_t c) {
  return {strand_at(table.beta1, c + 4), strand_at(table.beta1, c),
          strand_at(table.beta2, c + 4), strand_at(table.beta2, c),
          strand_at(table.beta3, c + 4)};
}

FiveTuple five_tuple(const BettiTable& table) {
  const auto profile = rao_profile(table);
  if (!profile) {
    throw not_diameter_one_error(
        "table is ACM: no intrinsic degree c to read the five-tuple at");
  }
  return five_tuple_at(table, profile->c);
}

std::int64_t hilbert_function(const BettiTable& table, std::int64_t v) {
  checked::i128 gamma = 0;
  const auto accumulate = [&](const GradedStrand& strand, int sign) {
    for (const auto& [i, mult] : strand) {
      gamma += sign * static_cast<checked::i128>(mult) *
               checked::binom3(static_cast<checked::i128>(v) - i + 3);
    }
  };
  accumulate(table.beta1, +1);
  accumulate(table.beta2, -1);
  accumulate(table.beta3, +1);
  return checked::to_i64(gamma, "hilbert_function");
}

namespace {

std::int64_t support_max(const BettiTable& table) {
  std::int64_t m = std::numeric_limits<std::int64_t>::min();
  for (const GradedStrand* strand :
       {&table.beta1, &table.beta2, &table.beta3}) {
    if (!strand->empty()) m = std::max(m, strand->rbegin()->first);
  }
  if (m == std::numeric_limits<std::int64_t>::min()) {
    throw parse_error("betti table: empty table has no Hilbert polynomial");
  }
  return m;
}

checked::i128 ideal_cohilbert(const BettiTable& table, std::int64_t v) {
  // binom(v+3,3) - gamma(v): the Hilbert function of the coordinate ring.
  checked::i128 p = checked::binom3(static_cast<checked::i128>(v) + 3);
  return p - hilbert_function(table, v);
}

}  // namespace

DegreeGenus degree_genus(const BettiTable& table) {
  const std::int64_t m = support_max(table);
  const checked::i128 p1 = ideal_cohilbert(table, m + 1);
  const checked::i128 p2 = ideal_cohilbert(table, m + 2);
  const checked::i128 p3 = ideal_cohilbert(table, m + 3);
  const checked::i128 d = p2 - p1;
  const checked::i128 g = d * (m + 1) + 1 - p1;
  if (p3 != d * (m + 3) + 1 - g) {
    throw parse_error(
        "betti table: Hilbert polynomial is not linear; the table does not "
        "resolve the ideal of a curve");
  }
  return {checked::to_i64(d, "degree"), checked::to_i64(g, "genus")};
}

std::int64_t speciality(const BettiTable& table, std::int64_t v) {
  const DegreeGenus dg = degree_genus(table);
  const auto profile = rao_profile(table);
  const checked::i128 rho =
      profile && profile->c == v ? static_cast<checked::i128>(profile->r) : 0;
  const checked::i128 chi = checked::binom3(static_cast<checked::i128>(v) + 3) -
                            (static_cast<checked::i128>(dg.degree) * v + 1 -
                             dg.genus);
  return checked::to_i64(chi - hilbert_function(table, v) + rho,
                         "speciality");
}

}  // namespace diamone
