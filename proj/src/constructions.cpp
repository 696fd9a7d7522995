#include "olss/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "olss/error.hpp"

namespace olss {

namespace {

PrimeField pick_field(std::optional<std::int64_t> prime, std::size_t stars) {
  const auto need = static_cast<std::int64_t>(stars) + 1;
  if (!prime) return smallest_prime_at_least(std::max<std::int64_t>(need, 2));
  PrimeField field(*prime);
  if (*prime < need) {
    throw Error(ErrorCode::FieldTooSmall, "GF(" + std::to_string(*prime) + ") has fewer than " +
                                              std::to_string(stars) + " nonzero elements");
  }
  return field;
}

// <s, v_α> with v_α = (1, t, t^2, ...) for t = α + 1; any k of these span F^k.
AffineForm inner_product(int alpha, int k, const PrimeField& field) {
  FieldRow row = FieldRow::Zero(k);
  std::int64_t power = 1;
  for (int j = 0; j < k; ++j) {
    row(j) = power;
    power = field.mul(power, alpha + 1);
  }
  return AffineForm(row);
}

std::vector<AffineForm> secret_symbols(int k) {
  std::vector<AffineForm> secret;
  for (int j = 0; j < k; ++j) secret.push_back(AffineForm::symbol(j));
  return secret;
}

}  // namespace

int weight(const StarCover& cover, int n) {
  std::vector<int> load(static_cast<std::size_t>(n), 0);
  for (const auto& star : cover.stars) {
    for (int v : members(star.leaves | bit(star.center))) ++load.at(static_cast<std::size_t>(v));
  }
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

void validate(const StarCover& cover, const AccessStructure& g) {
  if (!g.is_graph()) throw Error(ErrorCode::InvalidCover, "star covers are defined for graphs");
  if (cover.coverage < 1) throw Error(ErrorCode::InvalidCover, "coverage must be positive");
  std::map<VertexSet, int> count;
  for (const auto& star : cover.stars) {
    if (star.center < 0 || star.center >= g.size() || star.leaves == 0 || contains(star.leaves, star.center) ||
        !is_subset(star.leaves, g.vertices())) {
      throw Error(ErrorCode::InvalidCover, "malformed star centred at " + std::to_string(star.center));
    }
    for (int leaf : members(star.leaves)) {
      const VertexSet e = bit(star.center) | bit(leaf);
      if (!g.is_qualified(e) || g.is_qualified(bit(leaf)) || g.is_qualified(bit(star.center))) {
        throw Error(ErrorCode::InvalidCover,
                    "star pair " + std::to_string(star.center) + "-" + std::to_string(leaf) + " is not an edge");
      }
      ++count[e];
    }
  }
  for (VertexSet e : g.edges()) {
    if (count[e] < cover.coverage) {
      throw Error(ErrorCode::InvalidCover, "an edge is covered fewer than " + std::to_string(cover.coverage) + " times");
    }
  }
}

StarCover neighborhood_star_cover(const AccessStructure& g) {
  if (!g.is_graph()) throw Error(ErrorCode::InvalidCover, "star covers are defined for graphs");
  StarCover cover;
  cover.coverage = 2;
  for (int v = 0; v < g.size(); ++v) {
    VertexSet nb = 0;
    for (VertexSet e : g.edges()) {
      if (contains(e, v)) nb |= e & ~bit(v);
    }
    if (nb != 0) cover.stars.push_back({v, nb});
  }
  return cover;
}

LinearScheme stinson_star_cover(const AccessStructure& g, const StarCover& cover, std::optional<std::int64_t> prime) {
  validate(cover, g);
  const PrimeField field = pick_field(prime, cover.stars.size());
  const int k = cover.coverage;
  std::vector<std::vector<AffineForm>> shares(static_cast<std::size_t>(g.size()));
  int next_symbol = k;
  for (std::size_t a = 0; a < cover.stars.size(); ++a) {
    const auto& star = cover.stars[a];
    const AffineForm r = AffineForm::symbol(next_symbol++);
    shares[static_cast<std::size_t>(star.center)].push_back(
        subtract(inner_product(static_cast<int>(a), k, field), r, field));
    for (int leaf : members(star.leaves)) shares[static_cast<std::size_t>(leaf)].push_back(r);
  }
  return LinearScheme(field, next_symbol, secret_symbols(k), std::move(shares));
}

std::vector<int> vertex_weights(const GeneralizedStarSystem& system, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& star : system.stars) {
    ++w.at(static_cast<std::size_t>(star.center));
    for (VertexSet h : star.edges) {
      for (int x : members(h & ~bit(star.center))) ++w.at(static_cast<std::size_t>(x));
    }
  }
  return w;
}

void validate(const GeneralizedStarSystem& system, const AccessStructure& gamma) {
  if (system.coverage < 1) throw Error(ErrorCode::InvalidSystem, "coverage must be positive");
  std::map<VertexSet, int> count;
  const auto& edges = gamma.edges();
  for (const auto& star : system.stars) {
    if (star.center < 0 || star.center >= gamma.size() || star.edges.empty()) {
      throw Error(ErrorCode::InvalidSystem, "malformed generalized star");
    }
    for (VertexSet h : star.edges) {
      if (std::find(edges.begin(), edges.end(), h) == edges.end()) {
        throw Error(ErrorCode::InvalidSystem, "a star lists a set that is not a hyperedge");
      }
      if (!contains(h, star.center)) {
        throw Error(ErrorCode::InvalidSystem, "hyperedge does not contain its star's center " +
                                                  std::to_string(star.center));
      }
      ++count[h];
    }
  }
  for (VertexSet e : edges) {
    if (count[e] < system.coverage) {
      throw Error(ErrorCode::InvalidSystem,
                  "a hyperedge appears in fewer than " + std::to_string(system.coverage) + " stars");
    }
  }
}

GeneralizedStarSystem canonical_star_system(const AccessStructure& gamma) {
  GeneralizedStarSystem system;
  const int r = gamma.max_edge_size();
  system.coverage = std::max(r, 1);
  for (int v = 0; v < gamma.size(); ++v) {
    GeneralizedStar star{{}, v};
    for (VertexSet e : gamma.edges()) {
      if (contains(e, v)) star.edges.push_back(e);
    }
    if (!star.edges.empty()) system.stars.push_back(std::move(star));
  }
  for (VertexSet e : gamma.edges()) {
    for (int i = popcount(e); i < r; ++i) system.stars.push_back({{e}, members(e).front()});
  }
  return system;
}

LinearScheme generalized_star_cover(const AccessStructure& gamma, const GeneralizedStarSystem& system,
                                    std::optional<std::int64_t> prime) {
  validate(system, gamma);
  const PrimeField field = pick_field(prime, system.stars.size());
  const int k = system.coverage;
  std::vector<std::vector<AffineForm>> shares(static_cast<std::size_t>(gamma.size()));
  int next_symbol = k;
  for (std::size_t a = 0; a < system.stars.size(); ++a) {
    const auto& star = system.stars[a];
    const AffineForm big_r = AffineForm::symbol(next_symbol++);
    shares[static_cast<std::size_t>(star.center)].push_back(
        subtract(inner_product(static_cast<int>(a), k, field), big_r, field));
    for (VertexSet h : star.edges) {
      // Additive sharing of R_α among the other members of h.
      const auto others = members(h & ~bit(star.center));
      AffineForm rest = big_r;
      for (std::size_t i = 0; i < others.size(); ++i) {
        const auto x = static_cast<std::size_t>(others[i]);
        if (i + 1 == others.size()) {
          shares[x].push_back(rest);
        } else {
          const AffineForm rho = AffineForm::symbol(next_symbol++);
          shares[x].push_back(rho);
          rest = subtract(rest, rho, field);
        }
      }
    }
  }
  return LinearScheme(field, next_symbol, secret_symbols(k), std::move(shares));
}

LinearScheme shamir_threshold(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw Error(ErrorCode::BadParam, "threshold needs 1 <= k <= n");
  const PrimeField field = smallest_prime_at_least(n + 1);
  std::vector<std::vector<AffineForm>> shares;
  for (int i = 0; i < n; ++i) {
    FieldRow row(k);
    std::int64_t power = 1;
    for (int j = 0; j < k; ++j) {
      row(j) = power;
      power = field.mul(power, i + 1);
    }
    shares.push_back({AffineForm(row)});
  }
  return LinearScheme(field, k, {AffineForm::symbol(0)}, std::move(shares));
}

LinearScheme blowup_scheme(const LinearScheme& scheme, std::span<const int> class_sizes) {
  if (static_cast<int>(class_sizes.size()) != scheme.participants()) {
    throw Error(ErrorCode::SizeMismatch, "one class size per participant required");
  }
  std::vector<std::vector<AffineForm>> shares;
  for (std::size_t v = 0; v < class_sizes.size(); ++v) {
    if (class_sizes[v] < 1) throw Error(ErrorCode::ZeroClass, "class sizes must be positive");
    for (int i = 0; i < class_sizes[v]; ++i) shares.push_back(scheme.share(static_cast<int>(v)));
  }
  return LinearScheme(scheme.field(), scheme.base_dim(), scheme.secret(), std::move(shares));
}

LinearScheme relabel(const LinearScheme& scheme, const VertexMap& permutation) {
  const int n = scheme.participants();
  if (static_cast<int>(permutation.size()) != n || permutation.domain_set() != full_set(n) ||
      permutation.image_set() != full_set(n)) {
    throw Error(ErrorCode::BadParam, "relabel needs a permutation of the participants");
  }
  std::vector<std::vector<AffineForm>> shares(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) shares[static_cast<std::size_t>(permutation(v))] = scheme.share(v);
  return LinearScheme(scheme.field(), scheme.base_dim(), scheme.secret(), std::move(shares));
}

}  // namespace olss
