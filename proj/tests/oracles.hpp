#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "olss/access.hpp"
#include "olss/rational.hpp"
#include "olss/scheme.hpp"

namespace oracle {

using olss::VertexSet;

inline std::vector<int> bits_of(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if ((s >> v) & 1U) out.push_back(v);
  }
  return out;
}

/// Containment-minimal members of a family, by pairwise comparison.
inline std::set<VertexSet> minimal_sets(const std::vector<VertexSet>& family) {
  std::set<VertexSet> out;
  for (VertexSet a : family) {
    bool minimal = true;
    for (VertexSet b : family) {
      if (b != a && (b & ~a) == 0) minimal = false;
    }
    if (minimal) out.insert(a);
  }
  return out;
}

/// Image of a vertex set under a total permutation.
inline VertexSet map_set(VertexSet s, const std::vector<int>& perm) {
  VertexSet out = 0;
  for (int v : bits_of(s)) out |= VertexSet{1} << perm[static_cast<std::size_t>(v)];
  return out;
}

/// Every permutation of 0..n-1 preserving the edge set, by exhaustive listing.
inline std::vector<std::vector<int>> all_automorphisms(const olss::AccessStructure& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  const std::set<VertexSet> edges(g.edges().begin(), g.edges().end());
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (VertexSet e : g.edges()) ok = ok && edges.count(map_set(e, perm));
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Edges of g contained in s.
inline std::set<VertexSet> inside(const olss::AccessStructure& g, VertexSet s) {
  std::set<VertexSet> out;
  for (VertexSet e : g.edges()) {
    if ((e & ~s) == 0) out.insert(e);
  }
  return out;
}

/// Exhaustive full-symmetry test over all pairs of equal-size subsets (up to
/// size_cap) and all bijections between them.
inline bool fully_symmetric(const olss::AccessStructure& g, int size_cap) {
  const auto autos = all_automorphisms(g);
  const int n = g.size();
  for (VertexSet a = 0; a < (VertexSet{1} << n); ++a) {
    const auto dom = bits_of(a);
    if (static_cast<int>(dom.size()) > size_cap) continue;
    for (VertexSet b = 0; b < (VertexSet{1} << n); ++b) {
      if (bits_of(b).size() != dom.size()) continue;
      auto img = bits_of(b);
      do {
        std::vector<int> partial(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < dom.size(); ++i) partial[static_cast<std::size_t>(dom[i])] = img[i];
        std::set<VertexSet> mapped;
        for (VertexSet e : inside(g, a)) mapped.insert(map_set(e, partial));
        if (mapped != inside(g, b)) continue;
        const bool extends = std::any_of(autos.begin(), autos.end(), [&](const std::vector<int>& mu) {
          for (int v : dom) {
            if (mu[static_cast<std::size_t>(v)] != partial[static_cast<std::size_t>(v)]) return false;
          }
          return true;
        });
        if (!extends) return false;
      } while (std::next_permutation(img.begin(), img.end()));
    }
  }
  return true;
}

/// Rank over GF(p) by counting the distinct images x -> M x over all of
/// GF(p)^cols: the image has p^rank elements. Only for tiny p^cols.
inline int rank_by_counting(const olss::FieldMatrix& m, std::int64_t p) {
  const auto cols = m.cols();
  std::uint64_t total = 1;
  for (Eigen::Index j = 0; j < cols; ++j) total *= static_cast<std::uint64_t>(p);
  std::set<std::vector<std::int64_t>> images;
  std::vector<std::int64_t> x(static_cast<std::size_t>(cols), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& xi : x) {
      xi = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    std::vector<std::int64_t> y(static_cast<std::size_t>(m.rows()), 0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::int64_t acc = 0;
      for (Eigen::Index j = 0; j < cols; ++j) acc = (acc + m(i, j) % p * x[static_cast<std::size_t>(j)]) % p;
      y[static_cast<std::size_t>(i)] = (acc + p) % p;
    }
    images.insert(std::move(y));
  }
  int rank = 0;
  for (std::size_t size = images.size(); size > 1; size /= static_cast<std::size_t>(p)) ++rank;
  return rank;
}

/// Random Sperner hypergraph on n vertices: random sets, then keep minimal ones.
inline olss::AccessStructure random_sperner(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<VertexSet> pick(1, (VertexSet{1} << n) - 1);
  std::vector<VertexSet> family;
  const int k = count(rng);
  while (static_cast<int>(family.size()) < k) {
    const VertexSet s = pick(rng);
    if (olss::popcount(s) >= 2) family.push_back(s);
  }
  const auto minimal = minimal_sets(family);
  return olss::AccessStructure(n, std::vector<VertexSet>(minimal.begin(), minimal.end()));
}

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
