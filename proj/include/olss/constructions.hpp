#pragma once

#include <optional>
#include <vector>

#include "olss/access.hpp"
#include "olss/online.hpp"
#include "olss/scheme.hpp"

namespace olss {

// ---------------------------------------------------------------------------
// On-line dealers. Each factory builds a fresh single-run dealer per call.
// Constructor arguments are exactly the public knowledge the construction
// needs; a dealer never sees more.

/// Two bits r, t over GF(2), secret r+t; realizes P3 with complexity 1.
DealerFactory p3_sample();

/// First-fit over GF(2): every participant ends with exactly d bits; each
/// backward edge consumes the oldest unassigned bit of every earlier member
/// and closes with a bit making the edge's sum equal to the secret.
DealerFactory first_fit_general(int d);

/// Graph first-fit without knowledge of the maximum degree: a fresh bit r_p
/// plus r_q + s for every backward edge qp.
DealerFactory first_fit_graph();

/// Graph first-fit that withholds r_p from participants arriving with d
/// backward edges.
DealerFactory first_fit_graph_known_d(int d);

/// Complexity 3/2 dealer for the 6-cycle (see c6_dealer.cpp).
DealerFactory c6_optimal();

/// On-line lift of an off-line scheme: keeps an isomorphism between the
/// emerging structure and a substructure of gamma and hands out the
/// off-line share of the image vertex. Throws BadParam unless `offline` is
/// perfect for `gamma`.
DealerFactory symmetric_lift(const LinearScheme& offline, const AccessStructure& gamma);

/// On-line star packing over a field with more than d·n elements: two
/// dimensional secret, m' + d elements per participant with m < d backward
/// edges and 2d with m = d.
DealerFactory online_star_packing(int n, int d);

/// k parallel copies of the star packing with shared special leaves between
/// low-degree pairs; worst complexity d - 1/(2k). k defaults to d·n and must
/// satisfy d(n-1) + (2d-1)k <= 2dk - 1.
DealerFactory improved_graph_online(int n, int d, std::optional<int> k = std::nullopt);

/// Feasibility of the share-size ceiling for improved_graph_online.
bool improved_k_feasible(int n, int d, int k);

// ---------------------------------------------------------------------------
// The listed shares of the 6-cycle construction.

/// Forms over the free basis (a, b, c, d, e, x, y); f = a+b+c+d+e and
/// z = x+y encode the two parity constraints. Index 0 is the secret (x, y, z),
/// indices 1..8 are the shares ξ1..ξ8.
std::vector<std::vector<AffineForm>> c6_share_table();
inline constexpr int kC6BaseDim = 7;

/// Cyclic orders of the two target cycles over share indices 1..8.
inline constexpr int kC6Sigma[6] = {1, 2, 3, 4, 5, 6};
inline constexpr int kC6Pi[6] = {1, 2, 7, 5, 4, 8};

/// Off-line scheme on cycle(6) assigning share cycle[i] to vertex i.
LinearScheme c6_offline(const int (&cycle)[6]);

// ---------------------------------------------------------------------------
// Off-line constructions

struct Star {
  int center = 0;
  VertexSet leaves = 0;
};

/// Multiset of stars covering every edge at least `coverage` times.
struct StarCover {
  std::vector<Star> stars;
  int coverage = 1;
};

/// Max over vertices of the number of stars containing the vertex.
int weight(const StarCover& cover, int n);
/// Throws InvalidCover unless every star is a subgraph of g and every edge
/// is covered at least `coverage` times.
void validate(const StarCover& cover, const AccessStructure& g);

/// Stars S_v (center v, leaves its neighbours) for every non-isolated vertex;
/// a 2-cover of weight d+1.
StarCover neighborhood_star_cover(const AccessStructure& g);

/// Secret uniform in F^k; star α gets r_α at its leaves and <s, v_α> - r_α at
/// its center, the v_α being Vandermonde rows (any k span F^k). The field is
/// the smallest prime exceeding the number of stars unless given.
LinearScheme stinson_star_cover(const AccessStructure& g, const StarCover& cover,
                                std::optional<std::int64_t> prime = std::nullopt);

struct GeneralizedStar {
  std::vector<VertexSet> edges;
  int center = 0;
};

struct GeneralizedStarSystem {
  std::vector<GeneralizedStar> stars;
  int coverage = 1;
};

/// w(x): 1 per star centred at x plus, for stars centred elsewhere, the
/// number of their hyperedges containing x.
std::vector<int> vertex_weights(const GeneralizedStarSystem& system, int n);
/// Throws InvalidSystem unless each star's hyperedges are edges of gamma that
/// contain the star's center and every edge appears at least `coverage` times.
void validate(const GeneralizedStarSystem& system, const AccessStructure& gamma);

/// S_v = edges through v for each vertex with positive degree, padded with
/// single-edge stars (centred at the edge's smallest vertex) until every
/// edge appears exactly r = max edge size times. Coverage r.
GeneralizedStarSystem canonical_star_system(const AccessStructure& gamma);

/// Scheme achieving max_x w(x) / k: the center of star α holds
/// <s, v_α> - R_α and, for each of its hyperedges H, the other members of H
/// hold an additive sharing of R_α.
LinearScheme generalized_star_cover(const AccessStructure& gamma, const GeneralizedStarSystem& system,
                                    std::optional<std::int64_t> prime = std::nullopt);

/// Ideal k-out-of-n threshold scheme (Shamir) over the smallest prime > n.
LinearScheme shamir_threshold(int n, int k);

/// Same random variable for every vertex of a class: a scheme for
/// blowup(gamma, class_sizes) from a scheme for gamma.
LinearScheme blowup_scheme(const LinearScheme& scheme, std::span<const int> class_sizes);

/// Relabel a scheme's participants: result's participant map(v) holds v's share.
LinearScheme relabel(const LinearScheme& scheme, const VertexMap& permutation);

}  // namespace olss
