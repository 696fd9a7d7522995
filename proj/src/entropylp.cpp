#include "olss/entropylp.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "olss/error.hpp"
#include "simplex.hpp"

namespace olss {

std::string_view to_string(LpRule rule) {
  switch (rule) {
    case LpRule::Alpha: return "alpha";
    case LpRule::Monotone: return "monotone";
    case LpRule::Submodular: return "submodular";
    case LpRule::StrictMonotone: return "strict-monotone";
    case LpRule::StrictSubmodular: return "strict-submodular";
    case LpRule::Symmetry: return "symmetry";
  }
  return "unknown";
}

namespace {

// Rows built term by term; f(∅) = 0 terms are dropped.
class RowBuilder {
 public:
  explicit RowBuilder(LpRule rule) { row_.rule = rule; }
  RowBuilder& f(VertexSet set, long coef) {
    if (set != 0) row_.terms.emplace_back(set, Rational(coef));
    return *this;
  }
  RowBuilder& alpha(long coef) {
    row_.alpha_coef = coef;
    return *this;
  }
  LpRow at_least(long rhs) {
    row_.rhs = rhs;
    return std::move(row_);
  }
  LpRow equal_to(long rhs) {
    row_.rhs = rhs;
    row_.equality = true;
    return std::move(row_);
  }

 private:
  LpRow row_;
};

std::vector<bool> qualified_table(const AccessStructure& gamma) {
  const VertexSet all = gamma.vertices();
  std::vector<bool> q(static_cast<std::size_t>(all) + 1);
  for (VertexSet a = 0; a <= all; ++a) q[a] = gamma.is_qualified(a);
  return q;
}

Rational row_value(const LpRow& row, const std::vector<Rational>& f, const Rational& alpha) {
  Rational v = row.alpha_coef * alpha;
  for (const auto& [set, coef] : row.terms) v += coef * f[set];
  return v;
}

}  // namespace

EntropyLP build_lp(const AccessStructure& gamma, bool drop_rule_e) {
  const int n = gamma.size();
  if (n > kLpCap) throw Error(ErrorCode::CapExceeded, "entropy LP limited to n <= " + std::to_string(kLpCap));
  const bool with_e = n <= kRuleECap;
  if (!with_e && !drop_rule_e) {
    throw Error(ErrorCode::CapExceeded,
                "strict submodularity pairs limited to n <= " + std::to_string(kRuleECap) + "; pass drop_rule_e");
  }
  EntropyLP lp{gamma, {}, !with_e};
  auto& rows = lp.rows;
  const VertexSet all = gamma.vertices();
  const auto q = qualified_table(gamma);

  for (int v = 0; v < n; ++v) rows.push_back(RowBuilder(LpRule::Alpha).alpha(1).f(bit(v), -1).at_least(0));
  for (int i = 0; i < n; ++i) rows.push_back(RowBuilder(LpRule::Monotone).f(all, 1).f(all & ~bit(i), -1).at_least(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const VertexSet rest = all & ~bit(i) & ~bit(j);
      for (VertexSet a = rest;; a = (a - 1) & rest) {
        rows.push_back(RowBuilder(LpRule::Submodular)
                           .f(a | bit(i), 1)
                           .f(a | bit(j), 1)
                           .f(a | bit(i) | bit(j), -1)
                           .f(a, -1)
                           .at_least(0));
        if (a == 0) break;
      }
    }
  }
  for (VertexSet a = 0; a <= all; ++a) {
    if (q[a]) continue;
    for (int v = 0; v < n; ++v) {
      if (contains(a, v) || !q[a | bit(v)]) continue;
      rows.push_back(RowBuilder(LpRule::StrictMonotone).f(a | bit(v), 1).f(a, -1).at_least(1));
    }
  }
  if (with_e) {
    for (VertexSet a = 1; a <= all; ++a) {
      if (!q[a]) continue;
      for (VertexSet b = a + 1; b <= all; ++b) {
        if (!q[b] || q[a & b] || is_subset(a, b) || is_subset(b, a)) continue;
        rows.push_back(RowBuilder(LpRule::StrictSubmodular).f(a, 1).f(b, 1).f(a & b, -1).f(a | b, -1).at_least(1));
      }
    }
  }
  return lp;
}

EntropyLP add_symmetry(EntropyLP lp, const Substructure& delta) {
  if (!(delta.parent == lp.gamma)) throw Error(ErrorCode::BadParam, "substructure of a different structure");
  const auto labels = delta.labels();
  const auto local = delta.relabeled();
  const auto group = automorphisms(local);
  const int k = local.size();
  std::set<std::pair<VertexSet, VertexSet>> seen;
  for (const auto& mu : group) {
    for (VertexSet a = 1; a < bit(k); ++a) {
      VertexSet from = 0, to = 0;
      for (int i : members(a)) {
        from |= bit(labels[static_cast<std::size_t>(i)]);
        to |= bit(labels[static_cast<std::size_t>(mu(i))]);
      }
      if (from == to) continue;
      const auto key = std::minmax(from, to);
      if (!seen.insert(key).second) continue;
      lp.rows.push_back(RowBuilder(LpRule::Symmetry).f(key.second, 1).f(key.first, -1).equal_to(0));
    }
  }
  return lp;
}

KappaResult solve(const EntropyLP& lp) {
  const int n = lp.gamma.size();
  const auto subsets = static_cast<std::size_t>(bit(n));

  // Symmetry equalities become variable aliases.
  std::vector<std::size_t> parent(subsets);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : lp.rows) {
    if (!row.equality) continue;
    if (row.terms.size() != 2 || sgn(row.alpha_coef) != 0 || sgn(row.rhs) != 0 ||
        row.terms[0].second + row.terms[1].second != 0) {
      throw Error(ErrorCode::BadParam, "only f(A) = f(B) equalities are supported");
    }
    const auto a = find(row.terms[0].first), b = find(row.terms[1].first);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> column(subsets, -1);
  int columns = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    const auto r = find(s);
    if (column[r] < 0) column[r] = columns++;
    column[s] = column[r];
  }
  const int alpha_col = columns++;

  KappaResult result;
  result.stats.rows = lp.rows.size();
  result.stats.rule_e_dropped = lp.rule_e_dropped;
  for (const auto& row : lp.rows) ++result.stats.rows_by_rule[row.rule];

  std::set<std::pair<std::vector<std::pair<int, Rational>>, Rational>> reduced;
  for (const auto& row : lp.rows) {
    if (row.equality) continue;
    std::map<int, Rational> merged;
    if (sgn(row.alpha_coef) != 0) merged[alpha_col] += row.alpha_coef;
    for (const auto& [set, coef] : row.terms) merged[column[set]] += coef;
    std::vector<std::pair<int, Rational>> terms;
    for (auto& [col, coef] : merged) {
      if (sgn(coef) != 0) terms.emplace_back(col, coef);
    }
    if (terms.empty()) {
      if (sgn(row.rhs) > 0) throw Error(ErrorCode::Infeasible, "a constraint collapses to 0 >= positive");
      continue;
    }
    reduced.emplace(std::move(terms), row.rhs);
  }
  std::vector<detail::SparseRow> rows;
  rows.reserve(reduced.size());
  for (const auto& [terms, rhs] : reduced) rows.push_back({terms, rhs});
  std::vector<Rational> cost(static_cast<std::size_t>(columns));
  cost[static_cast<std::size_t>(alpha_col)] = 1;

  auto solution = detail::minimize(cost, rows);
  result.stats.reduced_rows = rows.size();
  result.stats.variables = static_cast<std::size_t>(columns);
  result.stats.pivots = solution.pivots;

  result.witness.assign(subsets, Rational(0));
  for (std::size_t s = 1; s < subsets; ++s) result.witness[s] = solution.x[static_cast<std::size_t>(column[s])];
  const Rational alpha = solution.x[static_cast<std::size_t>(alpha_col)];
  if (alpha != solution.objective) throw Error(ErrorCode::Infeasible, "primal and dual objectives disagree");
  for (const auto& row : lp.rows) {
    const Rational v = row_value(row, result.witness, alpha);
    if (row.equality ? v != row.rhs : v < row.rhs) {
      throw Error(ErrorCode::Infeasible, "witness violates a " + std::string(to_string(row.rule)) + " row");
    }
  }
  result.kappa = alpha;
  return result;
}

std::vector<EntropyViolation> check_entropy_function(const std::vector<Rational>& f, const AccessStructure& gamma) {
  const int n = gamma.size();
  if (n > kLpCap) throw Error(ErrorCode::CapExceeded, "entropy check limited to n <= " + std::to_string(kLpCap));
  const VertexSet all = gamma.vertices();
  if (f.size() != static_cast<std::size_t>(all) + 1) throw Error(ErrorCode::SizeMismatch, "one value per subset required");
  const auto q = qualified_table(gamma);
  std::vector<EntropyViolation> out;
  if (sgn(f[0]) != 0) out.push_back({'a', 0, 0});
  for (VertexSet b = 0; b <= all; ++b) {
    // Proper subsets a of b.
    for (VertexSet a = (b - 1) & b;; a = (a - 1) & b) {
      if (a != b) {
        if (f[b] < f[a]) out.push_back({'b', a, b});
        if (!q[a] && q[b] && f[b] < f[a] + 1) out.push_back({'d', a, b});
      }
      if (a == 0) break;
    }
  }
  for (VertexSet a = 0; a <= all; ++a) {
    for (VertexSet b = a + 1; b <= all; ++b) {
      if (is_subset(a, b) || is_subset(b, a)) continue;
      const Rational lhs = f[a] + f[b];
      const Rational rhs = f[a & b] + f[a | b];
      if (lhs < rhs) out.push_back({'c', a, b});
      if (q[a] && q[b] && !q[a & b] && lhs < rhs + 1) out.push_back({'e', a, b});
    }
  }
  return out;
}

std::string subset_label(VertexSet set) {
  std::string s = "[";
  bool first = true;
  for (int v : members(set)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

std::string export_lp(const EntropyLP& lp) {
  std::ostringstream os;
  os << "# n " << lp.gamma.size() << ", " << lp.rows.size() << " rows";
  if (lp.rule_e_dropped) os << ", strict submodularity dropped";
  os << "\nminimize alpha\n";
  for (const auto& row : lp.rows) {
    os << to_string(row.rule) << ": ";
    bool first = true;
    auto emit = [&](const Rational& coef, const std::string& name) {
      if (sgn(coef) == 0) return;
      const Rational mag = abs(coef);
      if (first) {
        if (sgn(coef) < 0) os << "-";
      } else {
        os << (sgn(coef) < 0 ? " - " : " + ");
      }
      if (mag != 1) os << mag.get_str() << " ";
      os << name;
      first = false;
    };
    emit(row.alpha_coef, "alpha");
    for (const auto& [set, coef] : row.terms) emit(coef, "f" + subset_label(set));
    if (first) os << "0";
    os << (row.equality ? " = " : " >= ") << row.rhs.get_str() << '\n';
  }
  return os.str();
}

}  // namespace olss
