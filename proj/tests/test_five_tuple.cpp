#include <doctest.h>

#include "diamone/errors.hpp"
#include "diamone/five_tuple.hpp"

using namespace diamone;

TEST_SUITE("five_tuple") {

TEST_CASE("parse and format round trip") {
  const FiveTuple t = parse_tuple("3,7,5,5,6");
  CHECK(t == FiveTuple{3, 7, 5, 5, 6});
  CHECK(format_tuple(t) == "3,7,5,5,6");
  CHECK(parse_tuple(" 1, 0 ,1,0, 1 ") == FiveTuple{1, 0, 1, 0, 1});
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_tuple(""), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,2,3,4"), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,2,3,4,5,6"), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,2,x,4,5"), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,2,-3,4,5"), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,2,,4,5"), parse_error);
}

TEST_CASE("step applicability matches componentwise bounds") {
  const FiveTuple t{1, 0, 1, 0, 1};
  CHECK(applicable(t, ReductionStep::P1));
  CHECK_FALSE(applicable(t, ReductionStep::P2));  // needs a2 >= 1
  CHECK_FALSE(applicable(t, ReductionStep::Qc));  // needs a2, b2 >= 1
  CHECK(applicable(t, ReductionStep::Qc4));

  CHECK(apply(t, ReductionStep::P1) == FiveTuple{1, 0, 0, 0, 0});
  CHECK(apply(t, ReductionStep::Qc4) == FiveTuple{0, 0, 0, 0, 1});
  CHECK_THROWS_AS(apply(t, ReductionStep::P2), not_applicable_error);
  CHECK_THROWS_AS(apply(t, ReductionStep::Qc), not_applicable_error);
}

TEST_CASE("step names") {
  CHECK(to_string(ReductionStep::P1) == "p1");
  CHECK(to_string(ReductionStep::P2) == "p2");
  CHECK(to_string(ReductionStep::Qc) == "qc");
  CHECK(to_string(ReductionStep::Qc4) == "qc4");
}

TEST_CASE("minimality means no step applies") {
  CHECK(is_minimal(FiveTuple{0, 0, 0, 0, 0}));
  CHECK(is_minimal(FiveTuple{5, 0, 0, 0, 0}));
  CHECK(is_minimal(FiveTuple{0, 3, 0, 0, 0}));
  CHECK(is_minimal(FiveTuple{0, 0, 0, 0, 7}));
  CHECK(is_minimal(FiveTuple{2, 0, 0, 3, 0}));   // a1 and b2 may coexist
  CHECK_FALSE(is_minimal(FiveTuple{1, 0, 1, 0, 1}));  // p1 applies
  CHECK_FALSE(is_minimal(FiveTuple{0, 1, 0, 0, 1}));  // p2 applies
  CHECK_FALSE(is_minimal(FiveTuple{0, 1, 0, 1, 0}));  // qc applies
  CHECK_FALSE(is_minimal(FiveTuple{1, 0, 1, 0, 0}));  // qc4 applies
  for (const ReductionStep step : kAllReductionSteps) {
    CHECK_FALSE(is_minimal(FiveTuple{1, 1, 1, 1, 1}));
    CHECK(applicable(FiveTuple{1, 1, 1, 1, 1}, step));
  }
}

TEST_CASE("obstructedness requires a nonzero module") {
  CHECK(is_obstructed(FiveTuple{1, 0, 1, 0, 1}));   // a1*b1 != 0
  CHECK(is_obstructed(FiveTuple{0, 1, 1, 0, 2}));   // a2*b1 != 0
  CHECK(is_obstructed(FiveTuple{0, 1, 0, 1, 1}));   // a2*b2 != 0
  CHECK_FALSE(is_obstructed(FiveTuple{0, 1, 0, 0, 1}));
  CHECK_FALSE(is_obstructed(FiveTuple{0, 0, 0, 0, 4}));
  // r = 0 curves are arithmetically Cohen-Macaulay and never obstructed,
  // whatever the other entries say.
  CHECK_FALSE(is_obstructed(FiveTuple{0, 1, 0, 1, 0}));
  CHECK_FALSE(is_obstructed(FiveTuple{3, 3, 3, 3, 0}));
}

TEST_CASE("unique minimal specialization criterion") {
  CHECK(has_unique_minimal(FiveTuple{0, 0, 0, 0, 0}));
  CHECK(has_unique_minimal(FiveTuple{0, 1, 1, 0, 2}));  // b1 >= ... chain collapses
  CHECK(has_unique_minimal(FiveTuple{1, 0, 2, 0, 1}));  // middle entries dominate
  CHECK_FALSE(has_unique_minimal(FiveTuple{1, 0, 1, 0, 1}));
  CHECK_FALSE(has_unique_minimal(FiveTuple{3, 7, 5, 5, 6}));
}

TEST_CASE("tuple ordering is lexicographic") {
  CHECK(FiveTuple{0, 0, 0, 0, 1} < FiveTuple{1, 0, 0, 0, 0});
  CHECK(FiveTuple{1, 2, 3, 4, 5} < FiveTuple{1, 2, 3, 5, 0});
}

}  // TEST_SUITE
