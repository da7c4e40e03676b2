#include <doctest.h>

#include "diamone/betti_table.hpp"
#include "diamone/errors.hpp"
#include "diamone/five_tuple.hpp"
#include "diamone/liaison.hpp"
#include "support/test_support.hpp"

using namespace diamone;
namespace ts = test_support;

TEST_SUITE("liaison") {

TEST_CASE("make_ci normalizes and validates") {
  CHECK(make_ci(7, 3) == CIType{3, 7});
  CHECK(make_ci(4, 4) == CIType{4, 4});
  CHECK_THROWS_AS(make_ci(0, 4), no_such_ci_error);
  CHECK_THROWS_AS(make_ci(3, -1), no_such_ci_error);
}

TEST_CASE("the distinguished degree reflects through f+g-4") {
  CHECK(link_c(2, make_ci(4, 4)) == 2);
  CHECK(link_c(4, make_ci(4, 6)) == 2);
  CHECK(link_c(0, make_ci(4, 2)) == 2);
  CHECK(link_c(6, make_ci(8, 8)) == 6);
}

TEST_CASE("degree and genus transform and the transform is an involution") {
  CHECK(link_numerics(DegreeGenus{42, 177}, make_ci(8, 8)) ==
        DegreeGenus{22, 57});
  CHECK(link_numerics(DegreeGenus{2, -1}, make_ci(4, 2)) == DegreeGenus{6, 3});
  CHECK(link_numerics(DegreeGenus{6, 3}, make_ci(4, 6)) == DegreeGenus{18, 39});
  for (const auto& [d, g] : {std::pair{6LL, 3LL}, {18LL, 39LL}, {33LL, 117LL}}) {
    const CIType ci = make_ci(5, 9);
    const DegreeGenus once = link_numerics(DegreeGenus{d, g}, ci);
    CHECK(link_numerics(once, ci) == DegreeGenus{d, g});
  }
}

TEST_CASE("the five-tuple reverses under linkage") {
  CHECK(link_tuple(FiveTuple{1, 0, 2, 0, 1}) == FiveTuple{0, 2, 0, 1, 1});
  CHECK(link_tuple(FiveTuple{0, 1, 0, 0, 1}) == FiveTuple{0, 0, 1, 0, 1});
  const FiveTuple t{3, 7, 5, 5, 6};
  CHECK(link_tuple(link_tuple(t)) == t);
}

TEST_CASE("self-linked curve: complete intersection pencil of quartics") {
  const BettiTable exe10 = ts::load_fixture("exe10.json");
  const LinkResult link = link_table(exe10, make_ci(4, 4));
  CHECK(link.table.beta1 == GradedStrand{{4, 5}});
  CHECK(link.table.beta2 == GradedStrand{{5, 4}, {6, 1}});
  CHECK(link.table.beta3 == GradedStrand{{6, 1}});
  CHECK(link.c == 2);
  CHECK(link.numerics == DegreeGenus{10, 11});
  CHECK(link.minimal);
  CHECK(degree_genus(link.table) == DegreeGenus{10, 11});

  // linking back through the same pencil restores the original table
  const LinkResult back = link_table(link.table, make_ci(4, 4));
  CHECK(back.table == exe10);
  CHECK(back.numerics == DegreeGenus{6, 3});
}

TEST_CASE("two skew lines link to the degree-6 genus-3 curve") {
  const LinkResult link =
      link_table(ts::load_fixture("skew_lines.json"), make_ci(4, 2));
  CHECK(link.table == ts::load_fixture("exe10.json"));
  CHECK(link.c == 2);
  CHECK(link.numerics == DegreeGenus{6, 3});
}

TEST_CASE("chained links reproduce a known degree-18 curve") {
  const BettiTable start = ts::load_fixture("skew_lines.json");
  const LinkResult first = link_table(start, make_ci(4, 2));
  const LinkResult second = link_table(first.table, make_ci(4, 6));
  CHECK(second.table == ts::load_fixture("ex22_x.json"));
  CHECK(second.numerics == DegreeGenus{18, 39});
  CHECK(second.c == 4);
}

TEST_CASE("equal-degree link with interior cancellation") {
  const BettiTable wa = ts::load_fixture("wa_a.json");
  const LinkResult link = link_table(wa, make_ci(8, 8));
  CHECK(link.c == 6);
  CHECK(link.numerics == DegreeGenus{22, 57});
  CHECK(link.table.beta1 == GradedStrand{{5, 2}, {6, 2}, {8, 3}});
  CHECK(link.table.beta2 == GradedStrand{{6, 1}, {7, 2}, {9, 4}});
  CHECK(link.table.beta3 == GradedStrand{{10, 1}});
  CHECK(five_tuple(link.table) == FiveTuple{0, 2, 0, 1, 1});
  CHECK_FALSE(link.minimal);  // generator and syzygy share degree 6
  CHECK(degree_genus(link.table) == DegreeGenus{22, 57});
}

TEST_CASE("five-tuple reversal holds for links avoiding the critical degrees") {
  // ci degrees 5 and 7 miss {c, c+4} of the input and {c, c+4} of the link,
  // so the reversed tuple is read off directly
  const BettiTable exe10 = ts::load_fixture("exe10.json");
  const LinkResult link = link_table(exe10, make_ci(5, 7));
  CHECK(link.c == 6);
  CHECK(five_tuple(link.table) == link_tuple(five_tuple(exe10)));
  CHECK(link.numerics == link_numerics(DegreeGenus{6, 3}, make_ci(5, 7)));
}

TEST_CASE("links require a containing complete intersection") {
  const BettiTable exe10 = ts::load_fixture("exe10.json");
  // the ideal contains no line and only one quadric: both must be rejected
  CHECK_THROWS_AS(link_table(exe10, make_ci(1, 4)), no_such_ci_error);
  CHECK_THROWS_AS(link_table(exe10, make_ci(2, 2)), no_such_ci_error);
  CHECK_NOTHROW(link_table(exe10, make_ci(2, 4)));
  // module-free tables are out of scope for the link transform
  CHECK_THROWS_AS(link_table(ts::load_fixture("acm.json"), make_ci(3, 3)),
                  no_such_ci_error);
}

}  // TEST_SUITE
