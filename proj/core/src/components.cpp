#include "diamone/components.hpp"

#include <map>

#include <json.hpp>

#include "diamone/checked_arith.hpp"
#include "diamone/errors.hpp"

namespace diamone {

using nlohmann::json;

ComponentReport component_report(const FiveTuple& t) {
  ComponentReport report;
  report.input = t;
  report.counts = count_components(t);
  report.components = enumerate_minimal(t);
  report.input_minimal = is_minimal(t);
  report.input_obstructed = is_obstructed(t);
  report.unique_minimal = has_unique_minimal(t);

  // The closed form and the enumeration must agree; a mismatch is a bug.
  std::uint64_t buchsbaum = 0, acm = 0;
  for (const auto& comp : report.components) ++(comp.acm ? acm : buchsbaum);
  if (buchsbaum != report.counts.buchsbaum || acm != report.counts.acm) {
    throw error("component_report: closed-form counts (" +
                std::to_string(report.counts.buchsbaum) + "," +
                std::to_string(report.counts.acm) +
                ") disagree with enumeration (" + std::to_string(buchsbaum) +
                "," + std::to_string(acm) + ") for (" + format_tuple(t) + ")");
  }
  return report;
}

namespace {

std::uint64_t strand_at(const GradedStrand& strand, std::int64_t degree) {
  const auto it = strand.find(degree);
  return it == strand.end() ? 0 : it->second;
}

}  // namespace

bool satisfies_pluss(const BettiTable& table, std::int64_t c,
                     std::uint64_t r) {
  // Degree c+3: generators may coexist only with the exact Koszul block.
  const std::uint64_t gen_c3 = strand_at(table.beta1, c + 3);
  const checked::i128 excess = static_cast<checked::i128>(
                                   strand_at(table.beta2, c + 3)) -
                               static_cast<checked::i128>(
                                   checked::mul_u64(4, r));
  if (gen_c3 != 0 && excess != 0) return false;

  // Everywhere else outside {c, c+3, c+4}: no coexistence at all.
  for (const auto& [deg, mult] : table.beta1) {
    if (deg == c || deg == c + 3 || deg == c + 4) continue;
    if (strand_at(table.beta2, deg) != 0) return false;
  }
  return true;
}

bool satisfies_pluss(const BettiTable& table) {
  const auto profile = rao_profile(table);
  if (!profile) {
    throw not_diameter_one_error(
        "satisfies_pluss: ACM table has no intrinsic degree c; use the "
        "explicit (table, c, r) overload");
  }
  return satisfies_pluss(table, profile->c, profile->r);
}

StratumDescriptor classify_singular_locus(const FiveTuple& t) {
  if (!is_minimal(t)) {
    throw not_applicable_error(
        "classify_singular_locus: tuple (" + format_tuple(t) +
        ") is not minimal; the classification describes generic curves of "
        "components");
  }
  const bool a1 = t.a1 > 0, a2 = t.a2 > 0, b1 = t.b1 > 0, b2 = t.b2 > 0,
             r = t.r > 0;

  StratumDescriptor out;
  const auto with_q = [&](std::vector<std::string> strata) {
    if (r) {
      strata.push_back("qc");
      strata.push_back("qc4");
    }
    return strata;
  };

  if ((a1 && !a2 && !b1 && b2) || (!a1 && a2 && b1 && !b2 && !r)) {
    out.case_label = "i";
    out.strata = with_q({"p1", "p2"});
  } else if ((!a1 && !a2 && !b1 && b2) || (!a1 && !a2 && b1 && !r)) {
    out.case_label = "ii";
    out.strata = with_q({"p2"});
  } else if ((a1 && !a2 && !b1 && !b2) || (a2 && !b1 && !b2 && !r)) {
    out.case_label = "iii";
    out.strata = with_q({"p1"});
  } else if (!a1 && !a2 && !b1 && !b2 && r) {
    out.case_label = "iv";
    out.strata = with_q({"p1+p2"});
  } else {
    out.case_label = "v";
    out.strata = {"p1+p2", "p1+qc", "p1+qc4", "p2+qc", "p2+qc4"};
  }
  return out;
}

std::uint64_t SpecializationLattice::minimal_count() const {
  std::uint64_t n = 0;
  for (const auto& node : nodes) n += node.minimal ? 1 : 0;
  return n;
}

SpecializationLattice specialization_lattice(const FiveTuple& root,
                                             std::uint64_t max_nodes) {
  SpecializationLattice lattice;
  std::map<FiveTuple, std::size_t> index;

  const auto intern = [&](const FiveTuple& t) {
    const auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (lattice.nodes.size() >= max_nodes) {
      throw budget_error("specialization_lattice: node budget of " +
                         std::to_string(max_nodes) + " exceeded expanding (" +
                         format_tuple(root) + ")");
    }
    const std::size_t id = lattice.nodes.size();
    lattice.nodes.push_back({t, is_minimal(t)});
    index.emplace(t, id);
    return id;
  };

  intern(root);
  for (std::size_t cursor = 0; cursor < lattice.nodes.size(); ++cursor) {
    // Note: nodes grows during the loop; indexing stands in for a queue.
    const FiveTuple current = lattice.nodes[cursor].tuple;
    for (const ReductionStep step : kAllReductionSteps) {
      if (!applicable(current, step)) continue;
      const std::size_t target = intern(apply(current, step));
      lattice.edges.push_back({cursor, target, step});
    }
  }
  return lattice;
}

std::string lattice_to_dot(const SpecializationLattice& lattice) {
  std::string dot;
  dot += "digraph specialization_lattice {\n";
  dot += "  rankdir=TB;\n";
  dot += "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& node = lattice.nodes[i];
    dot += "  n" + std::to_string(i) + " [label=\"" +
           format_tuple(node.tuple) + "\"";
    if (node.minimal) dot += " peripheries=2";
    dot += "];\n";
  }
  for (const auto& edge : lattice.edges) {
    dot += "  n" + std::to_string(edge.from) + " -> n" +
           std::to_string(edge.to) + " [label=\"" + to_string(edge.step) +
           "\"];\n";
  }
  dot += "}\n";
  return dot;
}

std::string lattice_to_json(const SpecializationLattice& lattice) {
  json nodes = json::array();
  for (const auto& node : lattice.nodes) {
    nodes.push_back({{"minimal", node.minimal},
                     {"tuple", {node.tuple.a1, node.tuple.a2, node.tuple.b1,
                                node.tuple.b2, node.tuple.r}}});
  }
  json edges = json::array();
  for (const auto& edge : lattice.edges) {
    edges.push_back({{"from", edge.from},
                     {"step", to_string(edge.step)},
                     {"to", edge.to}});
  }
  json j;
  j["edges"] = std::move(edges);
  j["nodes"] = std::move(nodes);
  return j.dump();
}

}  // namespace diamone
