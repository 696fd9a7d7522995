#include "simplex.hpp"

#include "olss/error.hpp"

namespace olss::detail {

namespace {

constexpr int kDegenerateRun = 50;

}  // namespace

SimplexResult minimize(const std::vector<Rational>& cost, const std::vector<SparseRow>& rows) {
  const int n = static_cast<int>(cost.size());
  const int m = static_cast<int>(rows.size());
  for (const auto& c : cost) {
    if (sgn(c) < 0) throw Error(ErrorCode::BadParam, "dual start needs a nonnegative cost vector");
  }

  // Dual columns: 0..m-1 are the rows (objective rhs), m..m+n-1 the slacks.
  std::vector<int> basis(static_cast<std::size_t>(n));
  std::vector<int> position(static_cast<std::size_t>(m + n), -1);
  for (int k = 0; k < n; ++k) {
    basis[static_cast<std::size_t>(k)] = m + k;
    position[static_cast<std::size_t>(m + k)] = k;
  }
  std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k) inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
  std::vector<Rational> value = cost;                          // basic variable values
  std::vector<Rational> price(static_cast<std::size_t>(n));   // simplex multipliers

  auto objective_of = [&](int col) -> Rational { return col < m ? rows[static_cast<std::size_t>(col)].rhs : Rational(0); };
  auto reduced_cost = [&](int col) -> Rational {
    if (col >= m) return -price[static_cast<std::size_t>(col - m)];
    Rational d = rows[static_cast<std::size_t>(col)].rhs;
    for (const auto& [var, coef] : rows[static_cast<std::size_t>(col)].terms) d -= price[static_cast<std::size_t>(var)] * coef;
    return d;
  };

  SimplexResult result;
  int degenerate = 0;
  std::vector<Rational> u(static_cast<std::size_t>(n));
  while (true) {
    const bool bland = degenerate >= kDegenerateRun;
    int entering = -1;
    Rational best = 0;
    for (int col = 0; col < m + n; ++col) {
      if (position[static_cast<std::size_t>(col)] >= 0) continue;
      Rational d = reduced_cost(col);
      if (sgn(d) <= 0) continue;
      if (bland) {
        entering = col;
        best = d;
        break;
      }
      if (entering < 0 || d > best) {
        entering = col;
        best = d;
      }
    }
    if (entering < 0) break;

    for (int i = 0; i < n; ++i) {
      auto& ui = u[static_cast<std::size_t>(i)];
      const auto& row = inv[static_cast<std::size_t>(i)];
      if (entering >= m) {
        ui = row[static_cast<std::size_t>(entering - m)];
      } else {
        ui = 0;
        for (const auto& [var, coef] : rows[static_cast<std::size_t>(entering)].terms) {
          if (sgn(row[static_cast<std::size_t>(var)]) != 0) ui += row[static_cast<std::size_t>(var)] * coef;
        }
      }
    }

    int leave = -1;
    Rational ratio;
    for (int i = 0; i < n; ++i) {
      const auto& ui = u[static_cast<std::size_t>(i)];
      if (sgn(ui) <= 0) continue;
      Rational r = value[static_cast<std::size_t>(i)] / ui;
      if (leave < 0 || r < ratio ||
          (r == ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        ratio = r;
      }
    }
    if (leave < 0) throw Error(ErrorCode::Infeasible, "entropy LP has no feasible point");
    degenerate = sgn(ratio) == 0 ? degenerate + 1 : 0;

    const auto r = static_cast<std::size_t>(leave);
    const Rational pivot = u[r];
    for (auto& x : inv[r]) {
      if (sgn(x) != 0) x /= pivot;
    }
    value[r] /= pivot;
    for (int i = 0; i < n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      if (ii == r || sgn(u[ii]) == 0) continue;
      const Rational factor = u[ii];
      for (int k = 0; k < n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        if (sgn(inv[r][kk]) != 0) inv[ii][kk] -= factor * inv[r][kk];
      }
      value[ii] -= factor * value[r];
    }
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      if (sgn(inv[r][kk]) != 0) price[kk] += best * inv[r][kk];
    }
    position[static_cast<std::size_t>(basis[r])] = -1;
    basis[r] = entering;
    position[static_cast<std::size_t>(entering)] = leave;
    ++result.pivots;
  }

  result.objective = 0;
  for (int i = 0; i < n; ++i) {
    result.objective += objective_of(basis[static_cast<std::size_t>(i)]) * value[static_cast<std::size_t>(i)];
  }
  result.x = price;
  return result;
}

}  // namespace olss::detail
