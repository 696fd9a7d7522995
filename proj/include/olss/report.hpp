#pragma once

#include <json.hpp>

#include <string>

#include "olss/access.hpp"
#include "olss/entropylp.hpp"
#include "olss/online.hpp"
#include "olss/rational.hpp"

namespace olss {

using Json = nlohmann::ordered_json;

/// {"fraction": "3/2", "decimal": "1.500000"}
Json rational_json(const Rational& q);
/// n, edge count, maximum degree and the edges as vertex lists.
Json structure_json(const AccessStructure& gamma);
Json security_json(const SecurityReport& report);
/// Verdict, counts, worst complexity, seed and per-ordering results (sorted).
Json sweep_json(const SweepResult& result);
Json kappa_json(const KappaResult& result, bool with_witness);

/// A command's output. The body depends only on the inputs (and seed); wall
/// time lives in the header so the body can be compared byte for byte.
struct Report {
  Json header = Json::object();
  Json body = Json::object();

  std::string json() const;
  /// "key: value" lines for the body; nested values are printed as JSON.
  std::string text() const;
};

}  // namespace olss
