#include "diamone/five_tuple.hpp"

#include <charconv>
#include <vector>

#include "diamone/errors.hpp"

namespace diamone {
namespace {

struct StepVector {
  std::uint64_t a1, a2, b1, b2, r;
};

constexpr StepVector step_vector(ReductionStep step) {
  switch (step) {
    case ReductionStep::P1:
      return {0, 0, 1, 0, 1};
    case ReductionStep::P2:
      return {0, 1, 0, 0, 1};
    case ReductionStep::Qc:
      return {0, 1, 0, 1, 0};
    case ReductionStep::Qc4:
      return {1, 0, 1, 0, 0};
  }
  return {0, 0, 0, 0, 0};  // unreachable
}

}  // namespace

std::string to_string(ReductionStep step) {
  switch (step) {
    case ReductionStep::P1:
      return "p1";
    case ReductionStep::P2:
      return "p2";
    case ReductionStep::Qc:
      return "qc";
    case ReductionStep::Qc4:
      return "qc4";
  }
  return "?";
}

bool applicable(const FiveTuple& t, ReductionStep step) {
  const StepVector v = step_vector(step);
  return t.a1 >= v.a1 && t.a2 >= v.a2 && t.b1 >= v.b1 && t.b2 >= v.b2 &&
         t.r >= v.r;
}

FiveTuple apply(const FiveTuple& t, ReductionStep step) {
  if (!applicable(t, step)) {
    throw not_applicable_error(std::string("reduction step ") +
                               to_string(step) + " not applicable to (" +
                               format_tuple(t) + ")");
  }
  const StepVector v = step_vector(step);
  return {t.a1 - v.a1, t.a2 - v.a2, t.b1 - v.b1, t.b2 - v.b2, t.r - v.r};
}

bool is_minimal(const FiveTuple& t) {
  // One product per step: Qc4, P1, P2, Qc.
  return (t.a1 == 0 || t.b1 == 0) && (t.b1 == 0 || t.r == 0) &&
         (t.r == 0 || t.a2 == 0) && (t.a2 == 0 || t.b2 == 0);
}

bool is_obstructed(const FiveTuple& t) {
  if (t.r == 0) return false;  // ACM curves are always unobstructed
  return (t.a2 != 0 && t.b1 != 0) || (t.a1 != 0 && t.b1 != 0) ||
         (t.a2 != 0 && t.b2 != 0);
}

namespace {

bool triplet_unique(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  if (x == 0 || y == 0 || z == 0) return true;
  return y >= x + z;
}

}  // namespace

bool has_unique_minimal(const FiveTuple& t) {
  return triplet_unique(t.a1, t.b1, t.r) && triplet_unique(t.b1, t.r, t.a2) &&
         triplet_unique(t.r, t.a2, t.b2);
}

FiveTuple parse_tuple(std::string_view text) {
  std::vector<std::uint64_t> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    // Trim surrounding spaces.
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() ||
        field.empty()) {
      throw parse_error("five-tuple: expected non-negative integer, got '" +
                        std::string(field) + "' in '" + std::string(text) +
                        "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 5) {
    throw parse_error("five-tuple: expected 5 comma-separated entries, got " +
                      std::to_string(parts.size()) + " in '" +
                      std::string(text) + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3], parts[4]};
}

std::string format_tuple(const FiveTuple& t) {
  return std::to_string(t.a1) + "," + std::to_string(t.a2) + "," +
         std::to_string(t.b1) + "," + std::to_string(t.b2) + "," +
         std::to_string(t.r);
}

}  // namespace diamone
