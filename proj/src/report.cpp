#include "olss/report.hpp"

#include <sstream>

namespace olss {

Json rational_json(const Rational& q) { return {{"fraction", to_fraction(q)}, {"decimal", to_decimal(q)}}; }

Json structure_json(const AccessStructure& gamma) {
  Json edges = Json::array();
  for (VertexSet e : gamma.edges()) edges.push_back(members(e));
  return {{"n", gamma.size()}, {"edges", gamma.edges().size()}, {"max_degree", max_degree(gamma)}, {"edge_list", edges}};
}

Json security_json(const SecurityReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"subset", members(v.subset)}, {"kind", std::string(to_string(v.kind))}});
  }
  return {{"perfect", report.perfect}, {"complexity", rational_json(report.complexity)}, {"violations", violations}};
}

Json sweep_json(const SweepResult& result) {
  Json runs = Json::array();
  for (const auto& r : result.runs) {
    Json run = {{"permutation", r.permutation}};
    if (r.failure) {
      run["dealer_failure"] = *r.failure;
    } else {
      run["perfect"] = r.report->perfect;
      run["complexity"] = to_fraction(r.report->complexity);
      if (!r.report->perfect) run["violations"] = security_json(*r.report)["violations"];
    }
    runs.push_back(std::move(run));
  }
  Json out = {{"orderings", result.runs.size()},
              {"perfect", result.all_perfect},
              {"dealer_failures", result.dealer_failures},
              {"violations", result.violations},
              {"worst_complexity", rational_json(result.worst_complexity)}};
  out["seed"] = result.seed ? Json(*result.seed) : Json(nullptr);
  out["runs"] = std::move(runs);
  return out;
}

Json kappa_json(const KappaResult& result, bool with_witness) {
  Json rules = Json::object();
  for (const auto& [rule, count] : result.stats.rows_by_rule) rules[std::string(to_string(rule))] = count;
  Json out = {{"kappa", rational_json(result.kappa)},
              {"rows", result.stats.rows},
              {"rows_by_rule", rules},
              {"reduced_rows", result.stats.reduced_rows},
              {"variables", result.stats.variables},
              {"pivots", result.stats.pivots},
              {"rule_e_dropped", result.stats.rule_e_dropped}};
  if (with_witness) {
    Json witness = Json::object();
    for (std::size_t s = 0; s < result.witness.size(); ++s) {
      witness[subset_label(static_cast<VertexSet>(s))] = to_fraction(result.witness[s]);
    }
    out["witness"] = std::move(witness);
  }
  return out;
}

std::string Report::json() const {
  Json all = {{"header", header}, {"body", body}};
  return all.dump(2) + "\n";
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& [key, value] : body.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_object() && value.contains("fraction") && value.size() == 2) {
      os << value["fraction"].get<std::string>() << " (" << value["decimal"].get<std::string>() << ")";
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace olss
