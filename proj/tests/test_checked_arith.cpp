#include <doctest.h>

#include <cstdint>
#include <limits>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

using namespace diamone;
using checked::i128;

TEST_SUITE("checked_arith") {

TEST_CASE("binom2 follows the vanish-below-diagonal convention") {
  CHECK(checked::binom2(i128{0}) == 0);
  CHECK(checked::binom2(i128{1}) == 0);
  CHECK(checked::binom2(i128{2}) == 1);
  CHECK(checked::binom2(i128{5}) == 10);
  CHECK(checked::binom2(i128{-3}) == 0);
}

TEST_CASE("binom3 follows the vanish-below-diagonal convention") {
  CHECK(checked::binom3(i128{2}) == 0);
  CHECK(checked::binom3(i128{3}) == 1);
  CHECK(checked::binom3(i128{6}) == 20);
  CHECK(checked::binom3(i128{10}) == 120);
  CHECK(checked::binom3(i128{-1}) == 0);
}

TEST_CASE("range-checked narrowing") {
  CHECK(checked::to_u64(i128{42}, "x") == 42);
  CHECK(checked::to_i64(i128{-7}, "x") == -7);
  CHECK_THROWS_AS(checked::to_u64(i128{-1}, "x"), arithmetic_error);
  const i128 big = i128{1} << 100;
  CHECK_THROWS_AS(checked::to_u64(big, "x"), arithmetic_error);
  CHECK_THROWS_AS(checked::to_i64(big, "x"), arithmetic_error);
}

TEST_CASE("checked uint64 operations") {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  CHECK(checked::add_u64(2, 3) == 5);
  CHECK_THROWS_AS(checked::add_u64(max, 1), arithmetic_error);
  CHECK(checked::mul_u64(6, 7) == 42);
  CHECK_THROWS_AS(checked::mul_u64(max, 2), arithmetic_error);
  CHECK(checked::sub_u64(5, 5, "x") == 0);
  CHECK_THROWS_AS(checked::sub_u64(3, 4, "x"), not_applicable_error);
}

TEST_CASE("i128 rendering") {
  CHECK(checked::i128_to_string(i128{0}) == "0");
  CHECK(checked::i128_to_string(i128{-12345}) == "-12345");
  i128 big = 1;
  for (int i = 0; i < 4; ++i) big *= 1000000000;  // 10^36, far past the u64 range
  CHECK(checked::i128_to_string(big) == "1000000000000000000000000000000000000");
}

}  // TEST_SUITE
