// Component geometry of the Hilbert scheme around a diameter-one curve:
// the full component report for a five-tuple, the genericity test for
// tables, the singular-locus classification at minimal tuples, and the
// explicit specialization lattice.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "diamone/betti_table.hpp"
#include "diamone/reduction.hpp"

namespace diamone {

/// Everything the tuple calculus knows about the components through a
/// point with this five-tuple.
struct ComponentReport {
  FiveTuple input;
  ComponentCount counts;  // closed-form; equals the enumeration split
  std::vector<MinimalSpecialization> components;
  bool input_minimal = false;
  bool input_obstructed = false;
  bool unique_minimal = false;
};

ComponentReport component_report(const FiveTuple& t);

/// Genericity-shape condition on a table around degree c with module
/// dimension r: the only degree where generators and syzygies may coexist
/// outside {c, c+4} is c+3, and there only against the Koszul block:
///   beta1[c+3] * (beta2[c+3] - 4r) = 0, and
///   beta1[i] * beta2[i] = 0 for every i outside {c, c+3, c+4}.
/// Necessary (not sufficient) for the curve to be generic in its component.
bool satisfies_pluss(const BettiTable& table, std::int64_t c,
                     std::uint64_t r);

/// satisfies_pluss at the table's own profile (r = 0 with caller-supplied c
/// for ACM tables is expressed via the explicit overload).
bool satisfies_pluss(const BettiTable& table);

/// Classification of the singular locus of the component whose generic
/// curve has the given minimal tuple.  The strata are the maximal families
/// of curves on the component boundary where smoothness first fails,
/// named by the reduction ghosts that reappear: "p1", "p2", "qc", "qc4"
/// and sums such as "p1+p2".
struct StratumDescriptor {
  std::string case_label;           // "i" .. "v"
  std::vector<std::string> strata;  // deterministic order
  bool operator==(const StratumDescriptor&) const = default;
};

/// Requires is_minimal(t); throws not_applicable_error otherwise.  The five
/// cases cover all minimal tuples exactly once.
StratumDescriptor classify_singular_locus(const FiveTuple& t);

/// The full reachability graph of the reduction steps from a root tuple.
/// Nodes are deduplicated tuples in breadth-first discovery order (root
/// first); edges carry the step that realizes them.
struct LatticeNode {
  FiveTuple tuple;
  bool minimal = false;
};

struct LatticeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  ReductionStep step = ReductionStep::P1;
};

struct SpecializationLattice {
  std::vector<LatticeNode> nodes;
  std::vector<LatticeEdge> edges;

  std::uint64_t minimal_count() const;
};

/// Breadth-first expansion; throws budget_error when the node count would
/// exceed max_nodes.
SpecializationLattice specialization_lattice(const FiveTuple& root,
                                             std::uint64_t max_nodes =
                                                 1'000'000);

/// Graphviz rendering: one node per tuple labeled "a1,a2,b1,b2,r", minimal
/// nodes drawn with doubled periphery, edges labeled by step.
std::string lattice_to_dot(const SpecializationLattice& lattice);

/// JSON adjacency form: {"edges":[{"from":i,"step":"P1","to":j}],
/// "nodes":[{"minimal":bool,"tuple":[a1,a2,b1,b2,r]}]}.
std::string lattice_to_json(const SpecializationLattice& lattice);

}  // namespace diamone
