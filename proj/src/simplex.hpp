#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "olss/rational.hpp"

namespace olss::detail {

struct SparseRow {
  std::vector<std::pair<int, Rational>> terms;
  Rational rhs;
};

struct SimplexResult {
  Rational objective;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Exact solver for   min c·x  s.t.  row·x >= rhs for every row, x >= 0,
// with c >= 0. Works on the dual (max rhs·y, Aᵀy <= c, y >= 0), whose slack
// basis is feasible because c >= 0, by revised simplex with an explicit basis
// inverse; Dantzig pricing with a switch to Bland's rule after a run of
// degenerate pivots. The primal optimum is read off the final simplex
// multipliers. Throws Infeasible when the primal has no solution.
SimplexResult minimize(const std::vector<Rational>& cost, const std::vector<SparseRow>& rows);

}  // namespace olss::detail
