#pragma once

#include "olss/access.hpp"
#include "olss/rational.hpp"

namespace olss::bounds {

// Closed-form complexity bounds. All take positive parameters and throw
// BadParam otherwise.

/// Off-line star-cover bound (d+1)/2 for graphs of maximum degree d.
Rational stinson(int d);
/// First-fit complexity: the maximum degree.
Rational ff(const AccessStructure& gamma);
/// Off-line bound d - (d-1)/n.
Rational tightened_offline(int d, int n);
/// On-line lower bound for a star with d edges plus m isolated vertices.
Rational star_lower(int d, int m);
/// On-line lower bound 2 - 4/n for the path on n vertices.
Rational path_lower(int n);
/// On-line upper bound 2 - 1/(4n) for the cycle on n+1 vertices.
Rational cycle_upper(int n);
/// On-line upper bound d - 1/(2dn) for graphs.
Rational graph_online_upper(int d, int n);
/// d - 1/(ndM + nd^2 + n) with M = min(r n^(2r-3), 3^(n-1)).
Rational thm15_upper(int n, int d, int r);
/// The M above.
Rational thm15_m(int n, int r);
/// floor(sqrt n) / 2.
Rational tree_online_lower(int n);
/// sqrt(n) / 3; irrational in general, so returned as a double.
double perf_ratio_lower(int n);

}  // namespace olss::bounds
