// diamone: command-line front end for the diameter-one Betti-table engine.
//
// Subcommands:
//   analyze   component/obstruction report for a table or five-tuple (JSON)
//   generize  apply ghost-cancellation / module-killing moves to a table
//   link      liaison through a complete intersection
//   lattice   expand the full specialization lattice of a five-tuple
//   oracle    exhaustive self-check of the tuple calculus up to a bound
//
// Exit codes: 0 success; 2 malformed input; 3 table not of diameter-one
// shape; 4 move not applicable; 5 no such complete intersection; 6 node
// budget exceeded; 1 internal error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamone/diamone.hpp"

namespace {

using nlohmann::json;

diamone::BettiTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw diamone::parse_error("cannot open table file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return diamone::table_from_json(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw diamone::parse_error("cannot open output file '" + path + "'");
  }
  out << content;
}

diamone::CIType parse_ci(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw diamone::parse_error(
        "--ci expects two comma-separated degrees, e.g. 4,4");
  }
  std::int64_t f = 0, g = 0;
  try {
    std::size_t used = 0;
    f = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    g = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw diamone::parse_error("--ci: cannot parse degrees from '" + text +
                               "'");
  }
  return diamone::make_ci(f, g);
}

int cmd_analyze(const std::string& tuple_text, const std::string& table_path,
                std::optional<std::int64_t> c) {
  if (tuple_text.empty() == table_path.empty()) {
    throw diamone::parse_error(
        "analyze: pass exactly one of --tuple or --table");
  }
  if (!tuple_text.empty()) {
    std::cout << diamone::analyze_tuple_json(diamone::parse_tuple(tuple_text));
  } else {
    std::cout << diamone::analyze_table_json(load_table(table_path), c);
  }
  return 0;
}

int cmd_generize(const std::string& table_path,
                 const std::vector<std::int64_t>& qi_degrees,
                 std::uint64_t p1, std::uint64_t p2) {
  const diamone::BettiTable before = load_table(table_path);
  diamone::GenerizationPlan plan;
  for (const std::int64_t degree : qi_degrees) ++plan.qi[degree];
  plan.p1 = p1;
  plan.p2 = p2;

  const diamone::GenerizationOutcome outcome =
      diamone::apply_plan(before, plan);

  // For ACM inputs (ghost cancellations only) there is no module window;
  // compare strictly by placing the exempt window beyond every degree.
  std::int64_t check_c;
  if (outcome.source_c) {
    check_c = *outcome.source_c;
  } else {
    check_c = 0;
    for (const auto* strand : {&before.beta1, &before.beta2, &before.beta3}) {
      if (!strand->empty()) {
        check_c = std::max(check_c, strand->rbegin()->first + 5);
      }
    }
  }

  json out;
  if (outcome.source_c) {
    out["c_source"] = *outcome.source_c;
  } else {
    out["c_source"] = nullptr;
  }
  out["semicontinuity"] =
      diamone::semicontinuity_check(before, outcome.table, check_c);
  out["table"] = json::parse(diamone::table_to_json(outcome.table));
  out["tuple_consistency"] =
      diamone::tuple_consistency(before, plan, outcome.table, check_c);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_link(const std::string& table_path, const std::string& ci_text) {
  const diamone::BettiTable table = load_table(table_path);
  const diamone::CIType ci = parse_ci(ci_text);
  const diamone::LinkResult result = diamone::link_table(table, ci);

  json out;
  out["c"] = result.c;
  out["ci"] = {ci.f, ci.g};
  out["degree"] = result.numerics.degree;
  out["genus"] = result.numerics.genus;
  out["minimal"] = result.minimal;
  out["table"] = json::parse(diamone::table_to_json(result.table));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_lattice(const std::string& tuple_text, const std::string& dot_path,
                const std::string& json_path, std::uint64_t max_nodes) {
  const diamone::FiveTuple root = diamone::parse_tuple(tuple_text);
  const diamone::SpecializationLattice lattice =
      diamone::specialization_lattice(root, max_nodes);
  if (!dot_path.empty()) write_file(dot_path, diamone::lattice_to_dot(lattice));
  if (!json_path.empty()) {
    write_file(json_path, diamone::lattice_to_json(lattice) + "\n");
  }
  std::cout << "nodes " << lattice.nodes.size() << "\n"
            << "edges " << lattice.edges.size() << "\n"
            << "minimal " << lattice.minimal_count() << "\n";
  return 0;
}

int cmd_oracle(std::uint64_t max_entry) {
  std::uint64_t tuples = 0;
  std::uint64_t count_mismatches = 0;
  std::uint64_t uniqueness_mismatches = 0;
  std::uint64_t lattice_mismatches = 0;
  std::uint64_t obstruction_violations = 0;
  std::optional<diamone::FiveTuple> first_counterexample;

  const auto note = [&](const diamone::FiveTuple& t) {
    if (!first_counterexample) first_counterexample = t;
  };

  const std::uint64_t n = max_entry;
  diamone::FiveTuple t;
  for (t.a1 = 0; t.a1 <= n; ++t.a1)
    for (t.a2 = 0; t.a2 <= n; ++t.a2)
      for (t.b1 = 0; t.b1 <= n; ++t.b1)
        for (t.b2 = 0; t.b2 <= n; ++t.b2)
          for (t.r = 0; t.r <= n; ++t.r) {
            ++tuples;
            const auto minimal = diamone::enumerate_minimal(t);
            const auto counts = diamone::count_components(t);

            std::uint64_t buchsbaum = 0, acm = 0;
            for (const auto& m : minimal) ++(m.acm ? acm : buchsbaum);
            if (buchsbaum != counts.buchsbaum || acm != counts.acm) {
              ++count_mismatches;
              note(t);
            }

            if (diamone::has_unique_minimal(t) != (minimal.size() == 1)) {
              ++uniqueness_mismatches;
              note(t);
            }

            std::set<diamone::FiveTuple> from_enumeration;
            for (const auto& m : minimal) {
              from_enumeration.insert(m.tuple);
              if (diamone::is_obstructed(m.tuple)) {
                ++obstruction_violations;
                note(t);
              }
            }
            std::set<diamone::FiveTuple> from_lattice;
            for (const auto& node : diamone::specialization_lattice(t).nodes) {
              if (node.minimal) from_lattice.insert(node.tuple);
            }
            if (from_lattice != from_enumeration) {
              ++lattice_mismatches;
              note(t);
            }
          }

  std::cout << "tuples " << tuples << "\n"
            << "count_mismatches " << count_mismatches << "\n"
            << "uniqueness_mismatches " << uniqueness_mismatches << "\n"
            << "lattice_mismatches " << lattice_mismatches << "\n"
            << "obstruction_violations " << obstruction_violations << "\n";
  const bool ok = count_mismatches == 0 && uniqueness_mismatches == 0 &&
                  lattice_mismatches == 0 && obstruction_violations == 0;
  if (!ok && first_counterexample) {
    std::cout << "first_counterexample "
              << diamone::format_tuple(*first_counterexample) << "\n";
  }
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diamone: component counts, deformation moves and liaison for curves "
      "in P^3 whose deficiency module is concentrated in one degree"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Component/obstruction report (canonical JSON to stdout)");
  std::string an_tuple, an_table;
  std::int64_t an_c = 0;
  analyze->add_option("--tuple", an_tuple, "five-tuple a1,a2,b1,b2,r");
  analyze->add_option("--table", an_table, "path to a Betti-table JSON file");
  auto* an_c_opt = analyze->add_option(
      "--c", an_c, "degree c to read the five-tuple at (required for ACM "
      "tables; must match the profile otherwise)");

  // generize
  auto* generize = app.add_subcommand(
      "generize", "Apply deformation moves to a table (JSON to stdout)");
  std::string gz_table;
  std::vector<std::int64_t> gz_qi;
  std::uint64_t gz_p1 = 0, gz_p2 = 0;
  generize->add_option("table", gz_table, "path to a Betti-table JSON file")
      ->required();
  generize->add_option("--qi", gz_qi,
                       "degree of a ghost pair to cancel (repeatable; moves "
                       "apply in ascending degree)");
  generize->add_option("--p1", gz_p1,
                       "syzygy-vs-module pairs to remove in degree c+4");
  generize->add_option("--p2", gz_p2,
                       "generator-vs-module pairs to remove in degree c");

  // link
  auto* link = app.add_subcommand(
      "link", "Link through a complete intersection (JSON to stdout)");
  std::string lk_table, lk_ci;
  link->add_option("table", lk_table, "path to a Betti-table JSON file")
      ->required();
  link->add_option("--ci", lk_ci, "surface degrees f,g of the CI")
      ->required();

  // lattice
  auto* lattice = app.add_subcommand(
      "lattice", "Expand the specialization lattice of a five-tuple");
  std::string lt_tuple, lt_dot, lt_json;
  std::uint64_t lt_max = 1'000'000;
  lattice->add_option("--tuple", lt_tuple, "five-tuple a1,a2,b1,b2,r")
      ->required();
  lattice->add_option("--dot", lt_dot, "write Graphviz rendering to this path");
  lattice->add_option("--json", lt_json, "write JSON adjacency to this path");
  lattice->add_option("--max", lt_max, "node budget (default 1000000)");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle",
      "Cross-check counts, uniqueness and lattice agreement over all "
      "tuples with entries <= N");
  std::uint64_t or_max = 3;
  oracle->add_option("--max", or_max, "largest entry to sweep (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  try {
    if (analyze->parsed()) {
      std::optional<std::int64_t> c;
      if (an_c_opt->count() > 0) c = an_c;
      return cmd_analyze(an_tuple, an_table, c);
    }
    if (generize->parsed()) return cmd_generize(gz_table, gz_qi, gz_p1, gz_p2);
    if (link->parsed()) return cmd_link(lk_table, lk_ci);
    if (lattice->parsed()) return cmd_lattice(lt_tuple, lt_dot, lt_json, lt_max);
    if (oracle->parsed()) return cmd_oracle(or_max);
    throw diamone::parse_error("no subcommand given");
  } catch (const diamone::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const diamone::not_diameter_one_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const diamone::not_applicable_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const diamone::no_such_ci_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const diamone::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
