// Overflow-checked exact integer helpers.
//
// All user-facing quantities in the library are exact integers: degrees are
// signed 64-bit, multiplicities unsigned 64-bit.  Intermediate sums and
// products are carried in 128-bit registers and range-checked on the way
// out; any overflow throws arithmetic_error rather than wrapping.
#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "diamone/errors.hpp"

namespace diamone::checked {

using i128 = __int128;

inline std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + digits : digits;
}

inline std::int64_t to_i64(i128 v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw arithmetic_error(std::string(what) + ": value " + i128_to_string(v) +
                           " exceeds 64-bit signed range");
  }
  return static_cast<std::int64_t>(v);
}

inline std::uint64_t to_u64(i128 v, const char* what) {
  if (v < 0 || v > static_cast<i128>(std::numeric_limits<std::uint64_t>::max())) {
    throw arithmetic_error(std::string(what) + ": value " + i128_to_string(v) +
                           " outside 64-bit unsigned range");
  }
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) throw arithmetic_error("unsigned addition overflow");
  return s;
}

inline std::uint64_t mul_u64(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw arithmetic_error("unsigned multiplication overflow");
  }
  return a * b;
}

/// Subtraction that must not go negative (multiplicity bookkeeping).
inline std::uint64_t sub_u64(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b > a) {
    throw not_applicable_error(std::string(what) + ": cannot remove " +
                               std::to_string(b) + " from " + std::to_string(a));
  }
  return a - b;
}

/// binom(m, 2) under the convention binom(m, n) = 0 whenever m < n
/// (negative m included).  Exact for |m| up to ~2^63.
inline i128 binom2(i128 m) {
  if (m < 2) return 0;
  return m * (m - 1) / 2;
}

/// binom(m, 3) under the same vanish-below-diagonal convention.
inline i128 binom3(i128 m) {
  if (m < 3) return 0;
  // m(m-1)(m-2) is divisible by 6; divide early to limit growth.
  i128 p = m * (m - 1) / 2;
  return p * (m - 2) / 3;
}

}  // namespace diamone::checked
