#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "diamone/betti_table.hpp"
#include "diamone/components.hpp"
#include "diamone/errors.hpp"
#include "diamone/five_tuple.hpp"
#include "support/test_support.hpp"

using namespace diamone;
namespace ts = test_support;

TEST_SUITE("components") {

TEST_CASE("component report for an obstructed two-component tuple") {
  const ComponentReport report = component_report(FiveTuple{1, 0, 1, 0, 1});
  CHECK(report.counts == ComponentCount{1, 1});
  CHECK(report.components.size() == 2);
  CHECK(report.input_obstructed);
  CHECK_FALSE(report.input_minimal);
  CHECK_FALSE(report.unique_minimal);
}

TEST_CASE("component report for an unobstructed module kill") {
  const ComponentReport report = component_report(FiveTuple{0, 1, 0, 0, 1});
  CHECK(report.counts == ComponentCount{0, 1});
  CHECK(report.components.size() == 1);
  CHECK(report.unique_minimal);
  CHECK_FALSE(report.input_obstructed);
  CHECK_FALSE(report.input_minimal);
}

TEST_CASE("generic-form condition on the fixture corpus") {
  CHECK(satisfies_pluss(ts::load_fixture("ghex.json")));
  CHECK(satisfies_pluss(ts::load_fixture("exe10.json")));
  CHECK(satisfies_pluss(ts::load_fixture("bkm1.json")));
  CHECK(satisfies_pluss(ts::load_fixture("ex22_x.json")));
  // module-free tables need the distinguished degree passed explicitly
  CHECK(satisfies_pluss(ts::load_fixture("sernesi.json"), 4, 0));
  CHECK_THROWS_AS(satisfies_pluss(ts::load_fixture("sernesi.json")),
                  not_diameter_one_error);
}

TEST_CASE("generic-form condition rejects overlapping off-window columns") {
  // a generator and a surplus syzygy share degree c+3
  const BettiTable surplus = table_from_json(
      R"({"beta1":{"5":1,"4":3,"2":1},"beta2":{"5":5},"beta3":{"6":1}})");
  CHECK_FALSE(satisfies_pluss(surplus));
  // a generator meets a syzygy at a plain degree outside the window
  const BettiTable meet = table_from_json(
      R"({"beta1":{"4":3,"3":1,"2":1},"beta2":{"5":4,"3":1},"beta3":{"6":1}})");
  CHECK_FALSE(satisfies_pluss(meet));
}

TEST_CASE("singular locus classification, one golden per case") {
  const auto classify = classify_singular_locus;
  // (i) both outer pairs populated
  CHECK(classify(FiveTuple{1, 0, 0, 1, 3}) ==
        StratumDescriptor{"i", {"p1", "p2", "qc", "qc4"}});
  CHECK(classify(FiveTuple{0, 1, 1, 0, 0}) == StratumDescriptor{"i", {"p1", "p2"}});
  // (ii) only the b2-side populated
  CHECK(classify(FiveTuple{0, 0, 0, 4, 0}) == StratumDescriptor{"ii", {"p2"}});
  CHECK(classify(FiveTuple{0, 0, 2, 1, 0}) == StratumDescriptor{"ii", {"p2"}});
  // (iii) only the a1-side populated
  CHECK(classify(FiveTuple{5, 0, 0, 0, 1}) ==
        StratumDescriptor{"iii", {"p1", "qc", "qc4"}});
  CHECK(classify(FiveTuple{2, 3, 0, 0, 0}) == StratumDescriptor{"iii", {"p1"}});
  // (iv) pure module
  CHECK(classify(FiveTuple{0, 0, 0, 0, 2}) ==
        StratumDescriptor{"iv", {"p1+p2", "qc", "qc4"}});
  // (v) the zero tuple: all length-two composites
  CHECK(classify(FiveTuple{0, 0, 0, 0, 0}) ==
        StratumDescriptor{
            "v", {"p1+p2", "p1+qc", "p1+qc4", "p2+qc", "p2+qc4"}});
}

TEST_CASE("classification requires a minimal tuple") {
  CHECK_THROWS_AS(classify_singular_locus(FiveTuple{1, 0, 1, 0, 1}),
                  not_applicable_error);
}

TEST_CASE("every minimal tuple in a sweep is classified") {
  std::uint64_t classified = 0;
  for (std::uint64_t a1 = 0; a1 <= 3; ++a1)
    for (std::uint64_t a2 = 0; a2 <= 3; ++a2)
      for (std::uint64_t b1 = 0; b1 <= 3; ++b1)
        for (std::uint64_t b2 = 0; b2 <= 3; ++b2)
          for (std::uint64_t rr = 0; rr <= 3; ++rr) {
            const FiveTuple t{a1, a2, b1, b2, rr};
            if (!is_minimal(t)) continue;
            const StratumDescriptor d = classify_singular_locus(t);
            CHECK(!d.strata.empty());
            const std::set<std::string> cases = {"i", "ii", "iii", "iv", "v"};
            CHECK(cases.count(d.case_label) == 1);
            ++classified;
          }
  CHECK(classified > 0);
}

TEST_CASE("lattice expansion of a two-component tuple") {
  const SpecializationLattice lattice =
      specialization_lattice(FiveTuple{1, 0, 1, 0, 1});
  REQUIRE(lattice.nodes.size() == 3);
  CHECK(lattice.nodes[0].tuple == FiveTuple{1, 0, 1, 0, 1});
  CHECK_FALSE(lattice.nodes[0].minimal);
  CHECK(lattice.nodes[1].tuple == FiveTuple{1, 0, 0, 0, 0});
  CHECK(lattice.nodes[1].minimal);
  CHECK(lattice.nodes[2].tuple == FiveTuple{0, 0, 0, 0, 1});
  CHECK(lattice.nodes[2].minimal);
  REQUIRE(lattice.edges.size() == 2);
  CHECK(lattice.edges[0].from == 0);
  CHECK(lattice.edges[0].to == 1);
  CHECK(lattice.edges[0].step == ReductionStep::P1);
  CHECK(lattice.edges[1].from == 0);
  CHECK(lattice.edges[1].to == 2);
  CHECK(lattice.edges[1].step == ReductionStep::Qc4);
  CHECK(lattice.minimal_count() == 2);
}

TEST_CASE("lattice of a minimal tuple is a single node") {
  const SpecializationLattice lattice =
      specialization_lattice(FiveTuple{0, 0, 0, 0, 0});
  CHECK(lattice.nodes.size() == 1);
  CHECK(lattice.edges.empty());
  CHECK(lattice.minimal_count() == 1);
}

TEST_CASE("lattice minimal nodes agree with enumeration") {
  const FiveTuple t{3, 7, 5, 5, 6};
  const SpecializationLattice lattice = specialization_lattice(t);
  std::set<FiveTuple> lattice_minimal;
  for (const LatticeNode& n : lattice.nodes) {
    if (n.minimal) lattice_minimal.insert(n.tuple);
  }
  std::set<FiveTuple> enumerated;
  for (const auto& m : enumerate_minimal(t)) enumerated.insert(m.tuple);
  CHECK(lattice_minimal == enumerated);
  CHECK(lattice_minimal.size() == 9);
}

TEST_CASE("lattice growth respects the node budget") {
  CHECK_THROWS_AS(specialization_lattice(FiveTuple{3, 7, 5, 5, 6}, 5),
                  budget_error);
  CHECK_NOTHROW(specialization_lattice(FiveTuple{0, 0, 0, 0, 0}, 1));
}

TEST_CASE("dot export") {
  const std::string dot = lattice_to_dot(specialization_lattice(FiveTuple{1, 0, 1, 0, 1}));
  CHECK(dot ==
        "digraph specialization_lattice {\n"
        "  rankdir=TB;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"1,0,1,0,1\"];\n"
        "  n1 [label=\"1,0,0,0,0\" peripheries=2];\n"
        "  n2 [label=\"0,0,0,0,1\" peripheries=2];\n"
        "  n0 -> n1 [label=\"p1\"];\n"
        "  n0 -> n2 [label=\"qc4\"];\n"
        "}\n");
}

TEST_CASE("json export") {
  const std::string json = lattice_to_json(specialization_lattice(FiveTuple{0, 1, 0, 0, 1}));
  CHECK(json ==
        R"({"edges":[{"from":0,"step":"p2","to":1}],)"
        R"("nodes":[{"minimal":false,"tuple":[0,1,0,0,1]},)"
        R"({"minimal":true,"tuple":[0,0,0,0,0]}]})");
}

}  // TEST_SUITE
