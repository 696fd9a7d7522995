#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace olss {

/// Subset of participants {0..n-1} as a bit mask; bit v set iff v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }
inline constexpr bool contains(VertexSet set, int v) { return (set >> v) & 1U; }
inline constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
int popcount(VertexSet set);
std::vector<int> members(VertexSet set);
VertexSet make_set(std::initializer_list<int> vertices);
VertexSet make_set(std::span<const int> vertices);

/// Lexicographic order on sorted member lists; the canonical edge order.
bool lex_less(VertexSet a, VertexSet b);

/// Hypergraph of minimal qualified sets on participants 0..n-1.
///
/// The edge list is kept in canonical (lexicographic) order and always forms
/// a Sperner system without empty edges. Isolated vertices are allowed.
class AccessStructure {
 public:
  AccessStructure() = default;
  /// Throws EmptyEdge, BadParam (vertex out of range, duplicate edge, or
  /// containment between edges).
  AccessStructure(int n, std::vector<VertexSet> edges);

  int size() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet vertices() const { return full_set(n_); }

  bool is_qualified(VertexSet set) const;
  int degree(int v) const;
  bool is_graph() const;
  int max_edge_size() const;
  bool has_singleton_edge() const;

  friend bool operator==(const AccessStructure&, const AccessStructure&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Keeps only the containment-minimal sets (duplicates collapse).
AccessStructure sperner_reduce(int n, std::vector<VertexSet> edges);

int max_degree(const AccessStructure& gamma);

/// Induced sub-hypergraph on a vertex subset of its parent.
struct Substructure {
  AccessStructure parent;
  VertexSet vertex_set = 0;
  std::vector<VertexSet> induced_edges;

  /// Members of vertex_set in increasing order; position i is local label i.
  std::vector<int> labels() const { return members(vertex_set); }
  /// The substructure as a standalone structure on 0..|S|-1.
  AccessStructure relabeled() const;
};

Substructure induced(const AccessStructure& gamma, VertexSet subset);

/// Injective map between vertex labels; domain()[i] is sent to image()[i].
class VertexMap {
 public:
  VertexMap() = default;
  VertexMap(std::vector<int> domain, std::vector<int> image);
  /// Total map on 0..n-1 given as image[v].
  static VertexMap from_permutation(std::vector<int> image);

  const std::vector<int>& domain() const { return domain_; }
  const std::vector<int>& image() const { return image_; }
  std::size_t size() const { return domain_.size(); }
  VertexSet domain_set() const;
  VertexSet image_set() const;

  /// Image of a vertex; the vertex must lie in the domain.
  int operator()(int v) const;
  /// Image of a subset of the domain.
  VertexSet apply(VertexSet set) const;
  /// this ∘ other, defined on other's domain.
  VertexMap compose(const VertexMap& other) const;

  std::string to_string() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<int> domain_;
  std::vector<int> image_;
};

/// True iff the map is an isomorphism between the substructures induced on
/// its domain and on its image.
bool is_induced_isomorphism(const AccessStructure& gamma, const VertexMap& map);

/// Default vertex cap for the factorial-cost symmetry searches.
inline constexpr int kSymmetryCap = 12;

/// All edge-set preserving permutations of the vertices, each as a total
/// VertexMap. Backtracking with degree and adjacency pruning.
std::vector<VertexMap> automorphisms(const AccessStructure& gamma, int cap = kSymmetryCap);

/// True iff some automorphism agrees with `map` on its domain.
bool extends_to_automorphism(std::span<const VertexMap> automorphisms, const VertexMap& map);

struct FullSymmetryResult {
  bool fully_symmetric = true;
  /// An induced isomorphism that no automorphism extends (when not symmetric).
  std::optional<VertexMap> witness;
  /// Number of partial isomorphisms examined.
  std::size_t examined = 0;
};

/// Checks that every isomorphism between induced substructures on at most
/// `size_cap` vertices extends to an automorphism.
///
/// The search grows partial isomorphisms one domain vertex at a time (domain
/// vertices added in increasing order) and keeps the set of automorphisms
/// still agreeing with the partial map. Only extendable maps are grown, so the
/// cost is roughly |Aut| * 2^n * n consistency checks rather than n!^2.
FullSymmetryResult is_fully_symmetric(const AccessStructure& gamma, int size_cap,
                                      int cap = kSymmetryCap);

/// Replace vertex v by a class of class_sizes[v] equivalent vertices (class v
/// occupies consecutive labels) and each edge by the complete multipartite
/// hypergraph on its classes. Throws ZeroClass / BadParam.
AccessStructure blowup(const AccessStructure& gamma, std::span<const int> class_sizes);

/// First label of each class in blowup(gamma, class_sizes), followed by the
/// total vertex count.
std::vector<int> blowup_offsets(std::span<const int> class_sizes);

namespace family {

/// Vertices 0..n-1, edges {i,i+1}.
AccessStructure path(int n);
/// Vertices 0..n-1 in cyclic order; n >= 3.
AccessStructure cycle(int n);
AccessStructure complete(int n);
/// Center 0, leaves 1..d, isolated d+1..d+m.
AccessStructure star_plus_isolated(int d, int m);
/// Star with d = floor(sqrt(n)) edges and m = n-d-2 isolated vertices laid out
/// as star_plus_isolated(d, m), plus apex n-1 joined to the center and to
/// every isolated vertex.
AccessStructure tree_tn(int n);
/// All k-subsets of 0..n-1.
AccessStructure threshold(int n, int k);
/// Parts occupy consecutive labels in the given order.
AccessStructure complete_multipartite(std::span<const int> part_sizes);
/// Vertices are bit strings 0..2^dim-1; edges join words at Hamming distance 1.
AccessStructure cube_graph(int dim);
/// Outer 5-cycle 0..4, spokes i to i+5, inner pentagram i+5 to ((i+2)%5)+5.
AccessStructure petersen();
/// n vertices, no edges.
AccessStructure edgeless(int n);

}  // namespace family

}  // namespace olss
