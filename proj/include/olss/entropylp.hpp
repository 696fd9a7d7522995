#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "olss/access.hpp"
#include "olss/rational.hpp"

namespace olss {

/// Which family a constraint row comes from.
enum class LpRule { Alpha, Monotone, Submodular, StrictMonotone, StrictSubmodular, Symmetry };
std::string_view to_string(LpRule rule);

/// sum(coef · f(subset)) + alpha_coef · α  (>= or =)  rhs. Subsets are
/// vertex masks; the empty set never appears.
struct LpRow {
  std::vector<std::pair<VertexSet, Rational>> terms;
  Rational alpha_coef;
  Rational rhs;
  bool equality = false;
  LpRule rule = LpRule::Alpha;
};

/// Entropy-method LP: minimize α subject to f({v}) <= α and the rows, with
/// f(∅) = 0 and f normalized by the secret entropy.
struct EntropyLP {
  AccessStructure gamma;
  std::vector<LpRow> rows;
  bool rule_e_dropped = false;
};

/// Largest n accepted by build_lp.
inline constexpr int kLpCap = 10;
/// Largest n for which strict submodularity pairs are enumerated.
inline constexpr int kRuleECap = 7;

/// Elemental monotonicity and submodularity, strict monotonicity for
/// single-vertex extensions, and strict submodularity over qualified pairs.
/// Throws CapExceeded above kLpCap, or above kRuleECap unless `drop_rule_e`.
EntropyLP build_lp(const AccessStructure& gamma, bool drop_rule_e = false);

/// Equalities f(μA) = f(A) for every automorphism μ of Δ and every A ⊆ V(Δ).
/// Throws BadParam when Δ is not a substructure of the LP's structure.
EntropyLP add_symmetry(EntropyLP lp, const Substructure& delta);

struct LpStats {
  std::map<LpRule, std::size_t> rows_by_rule;
  std::size_t rows = 0;
  /// Distinct rows and variables after symmetry aliasing.
  std::size_t reduced_rows = 0;
  std::size_t variables = 0;
  std::size_t pivots = 0;
  bool rule_e_dropped = false;
};

struct KappaResult {
  Rational kappa;
  /// Optimal f, indexed by subset mask.
  std::vector<Rational> witness;
  LpStats stats;
};

/// Exact rational optimum; the witness is re-verified against every row.
/// Throws Infeasible if the LP has no solution or the witness fails a row.
KappaResult solve(const EntropyLP& lp);

struct EntropyViolation {
  char rule = 'a';
  VertexSet first = 0;
  VertexSet second = 0;
  friend bool operator==(const EntropyViolation&, const EntropyViolation&) = default;
};

/// Checks rules a)-e) in full (all pairs) for f indexed by subset mask.
/// Requires n <= kLpCap.
std::vector<EntropyViolation> check_entropy_function(const std::vector<Rational>& f, const AccessStructure& gamma);

/// Plain-text listing: an objective line, then one constraint per line with
/// subsets printed as sorted vertex lists, e.g. "f[0,2] - f[0] >= 1".
std::string export_lp(const EntropyLP& lp);

/// "[0,2]" style rendering of a subset.
std::string subset_label(VertexSet set);

}  // namespace olss
