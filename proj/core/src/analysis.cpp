#include "diamone/analysis.hpp"

#include <json.hpp>

#include "diamone/components.hpp"
#include "diamone/errors.hpp"

namespace diamone {

using nlohmann::json;

namespace {

json tuple_to_json(const FiveTuple& t) {
  return json::array({t.a1, t.a2, t.b1, t.b2, t.r});
}

json witness_to_json(const ReductionWitness& w) {
  return json::array({w.k1, w.k2, w.k3, w.k4});
}

/// The tuple-calculus sections shared by table and bare-tuple reports.
void fill_tuple_sections(json& report, const FiveTuple& t) {
  const ComponentReport cr = component_report(t);

  json list = json::array();
  for (const auto& comp : cr.components) {
    list.push_back({{"acm", comp.acm},
                    {"tuple", tuple_to_json(comp.tuple)},
                    {"witness", witness_to_json(comp.witness)}});
  }
  report["components"] = {{"list", std::move(list)},
                          {"n_acm", cr.counts.acm},
                          {"n_buchsbaum", cr.counts.buchsbaum},
                          {"total", cr.counts.total()}};
  report["five_tuple"] = tuple_to_json(t);
  report["minimal"] = cr.input_minimal;
  report["obstructed"] = cr.input_obstructed;
  report["unique_minimal"] = cr.unique_minimal;
  if (cr.input_minimal) {
    const StratumDescriptor sd = classify_singular_locus(t);
    report["singular_locus"] = {{"case", sd.case_label},
                                {"strata", sd.strata}};
  }
}

}  // namespace

std::string analyze_table_json(const BettiTable& table,
                               std::optional<std::int64_t> c_override) {
  const auto profile = rao_profile(table);
  std::int64_t c = 0;
  std::uint64_t r = 0;
  if (profile) {
    c = profile->c;
    r = profile->r;
    if (c_override && *c_override != c) {
      throw parse_error("analyze: explicit c = " +
                        std::to_string(*c_override) +
                        " contradicts the table's own profile degree c = " +
                        std::to_string(c));
    }
  } else {
    if (!c_override) {
      throw parse_error(
          "analyze: table is ACM; pass the degree c to read the five-tuple "
          "at");
    }
    c = *c_override;
  }

  json report;
  fill_tuple_sections(report, five_tuple_at(table, c));

  json input;
  input["kind"] = "table";
  input["table"] = json::parse(table_to_json(table));
  if (!profile) input["c"] = c;  // required to reproduce this analysis
  report["input"] = std::move(input);

  const DegreeGenus dg = degree_genus(table);
  json gamma;
  for (std::int64_t v = c - 1; v <= c + 4; ++v) {
    gamma[std::to_string(v)] = hilbert_function(table, v);
  }
  report["numerics"] = {{"c", c},
                        {"degree", dg.degree},
                        {"gamma", std::move(gamma)},
                        {"genus", dg.genus},
                        {"r", r},
                        {"rao", profile ? "diameter_one" : "acm"}};
  report["pluss"] = satisfies_pluss(table, c, r);

  return report.dump() + "\n";
}

std::string analyze_tuple_json(const FiveTuple& t) {
  json report;
  fill_tuple_sections(report, t);
  report["input"] = {{"kind", "tuple"}, {"tuple", tuple_to_json(t)}};
  return report.dump() + "\n";
}

}  // namespace diamone
