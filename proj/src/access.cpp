#include "olss/access.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "olss/error.hpp"

namespace olss {

int popcount(VertexSet set) { return std::popcount(set); }

std::vector<int> members(VertexSet set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(set)));
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorCode::BadParam, "vertex label out of range");
    s |= bit(v);
  }
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  // Compare sorted member lists: the first differing lowest element decides,
  // a proper prefix sorts first.
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

AccessStructure::AccessStructure(int n, std::vector<VertexSet> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::BadParam, "participant count out of range");
  for (VertexSet e : edges) {
    if (e == 0) throw Error(ErrorCode::EmptyEdge, "the empty set is not a hyperedge");
    if (!is_subset(e, full_set(n))) throw Error(ErrorCode::BadParam, "edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end(), lex_less);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && is_subset(edges[i], edges[j])) {
        throw Error(ErrorCode::BadParam, "edges do not form a Sperner system");
      }
    }
  }
  edges_ = std::move(edges);
}

bool AccessStructure::is_qualified(VertexSet set) const {
  return std::any_of(edges_.begin(), edges_.end(), [set](VertexSet e) { return is_subset(e, set); });
}

int AccessStructure::degree(int v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [v](VertexSet e) { return contains(e, v); }));
}

bool AccessStructure::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return popcount(e) == 2; });
}

int AccessStructure::max_edge_size() const {
  int r = 0;
  for (VertexSet e : edges_) r = std::max(r, popcount(e));
  return r;
}

bool AccessStructure::has_singleton_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](VertexSet e) { return popcount(e) == 1; });
}

AccessStructure sperner_reduce(int n, std::vector<VertexSet> edges) {
  for (VertexSet e : edges) {
    if (e == 0) throw Error(ErrorCode::EmptyEdge, "the empty set is not a hyperedge");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VertexSet> minimal;
  for (VertexSet e : edges) {
    bool dominated = std::any_of(edges.begin(), edges.end(),
                                 [e](VertexSet f) { return f != e && is_subset(f, e); });
    if (!dominated) minimal.push_back(e);
  }
  return AccessStructure(n, std::move(minimal));
}

int max_degree(const AccessStructure& gamma) {
  int d = 0;
  for (int v = 0; v < gamma.size(); ++v) d = std::max(d, gamma.degree(v));
  return d;
}

Substructure induced(const AccessStructure& gamma, VertexSet subset) {
  if (!is_subset(subset, gamma.vertices())) {
    throw Error(ErrorCode::BadParam, "induced: subset is not within the vertex set");
  }
  Substructure sub{gamma, subset, {}};
  for (VertexSet e : gamma.edges()) {
    if (is_subset(e, subset)) sub.induced_edges.push_back(e);
  }
  return sub;
}

AccessStructure Substructure::relabeled() const {
  std::vector<int> local(static_cast<std::size_t>(kMaxVertices), -1);
  auto lab = labels();
  for (std::size_t i = 0; i < lab.size(); ++i) local[static_cast<std::size_t>(lab[i])] = static_cast<int>(i);
  std::vector<VertexSet> edges;
  for (VertexSet e : induced_edges) {
    VertexSet m = 0;
    for (int v : members(e)) m |= bit(local[static_cast<std::size_t>(v)]);
    edges.push_back(m);
  }
  return AccessStructure(static_cast<int>(lab.size()), std::move(edges));
}

// ---------------------------------------------------------------------------
// VertexMap

VertexMap::VertexMap(std::vector<int> domain, std::vector<int> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.size() != image_.size()) throw Error(ErrorCode::BadParam, "vertex map arity mismatch");
  if (static_cast<std::size_t>(popcount(make_set(domain_))) != domain_.size() ||
      static_cast<std::size_t>(popcount(make_set(image_))) != image_.size()) {
    throw Error(ErrorCode::BadParam, "vertex map is not injective");
  }
}

VertexMap VertexMap::from_permutation(std::vector<int> image) {
  std::vector<int> domain(image.size());
  std::iota(domain.begin(), domain.end(), 0);
  return VertexMap(std::move(domain), std::move(image));
}

VertexSet VertexMap::domain_set() const { return make_set(domain_); }
VertexSet VertexMap::image_set() const { return make_set(image_); }

int VertexMap::operator()(int v) const {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] == v) return image_[i];
  }
  throw Error(ErrorCode::BadParam, "vertex outside the map's domain");
}

VertexSet VertexMap::apply(VertexSet set) const {
  VertexSet out = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (contains(set, domain_[i])) {
      out |= bit(image_[i]);
      set &= ~bit(domain_[i]);
    }
  }
  if (set != 0) throw Error(ErrorCode::BadParam, "set not contained in the map's domain");
  return out;
}

VertexMap VertexMap::compose(const VertexMap& other) const {
  std::vector<int> img;
  img.reserve(other.size());
  for (int v : other.image_) img.push_back((*this)(v));
  return VertexMap(other.domain_, std::move(img));
}

std::string VertexMap::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) os << ", ";
    os << domain_[i] << "->" << image_[i];
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Isomorphism machinery

namespace {

// Partial injective map with O(1) lookups in both directions.
struct PartialMap {
  std::array<int, kMaxVertices> fwd;
  std::array<int, kMaxVertices> back;
  VertexSet dom = 0;
  VertexSet img = 0;

  PartialMap() {
    fwd.fill(-1);
    back.fill(-1);
  }

  VertexSet forward(VertexSet s) const {
    VertexSet out = 0;
    for (int v : members(s)) out |= bit(fwd[static_cast<std::size_t>(v)]);
    return out;
  }
  VertexSet backward(VertexSet s) const {
    VertexSet out = 0;
    for (int v : members(s)) out |= bit(back[static_cast<std::size_t>(v)]);
    return out;
  }
  void set(int s, int t) {
    fwd[static_cast<std::size_t>(s)] = t;
    back[static_cast<std::size_t>(t)] = s;
    dom |= bit(s);
    img |= bit(t);
  }
  void unset(int s, int t) {
    fwd[static_cast<std::size_t>(s)] = -1;
    back[static_cast<std::size_t>(t)] = -1;
    dom &= ~bit(s);
    img &= ~bit(t);
  }
};

class EdgeIndex {
 public:
  explicit EdgeIndex(const AccessStructure& gamma)
      : edges_(gamma.edges().begin(), gamma.edges().end()), incident_(static_cast<std::size_t>(gamma.size())) {
    for (VertexSet e : gamma.edges()) {
      for (int v : members(e)) incident_[static_cast<std::size_t>(v)].push_back(e);
    }
  }
  bool is_edge(VertexSet e) const { return edges_.count(e) != 0; }
  const std::vector<VertexSet>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }

  // Would adding s->t keep `map` an isomorphism between induced substructures?
  bool consistent(const PartialMap& map, int s, int t) const {
    VertexSet dom = map.dom | bit(s);
    VertexSet img = map.img | bit(t);
    for (VertexSet e : incident(s)) {
      if (!is_subset(e, dom)) continue;
      VertexSet image = map.forward(e & ~bit(s)) | bit(t);
      if (!is_edge(image)) return false;
    }
    for (VertexSet f : incident(t)) {
      if (!is_subset(f, img)) continue;
      VertexSet pre = map.backward(f & ~bit(t)) | bit(s);
      if (!is_edge(pre)) return false;
    }
    return true;
  }

 private:
  std::unordered_set<VertexSet> edges_;
  std::vector<std::vector<VertexSet>> incident_;
};

void check_cap(const AccessStructure& gamma, int cap) {
  if (gamma.size() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "structure has " + std::to_string(gamma.size()) + " vertices, cap is " + std::to_string(cap));
  }
}

}  // namespace

bool is_induced_isomorphism(const AccessStructure& gamma, const VertexMap& map) {
  for (int v : map.domain()) {
    if (v < 0 || v >= gamma.size()) return false;
  }
  for (int v : map.image()) {
    if (v < 0 || v >= gamma.size()) return false;
  }
  EdgeIndex index(gamma);
  VertexSet dom = map.domain_set();
  VertexSet img = map.image_set();
  for (VertexSet e : gamma.edges()) {
    if (is_subset(e, dom) && !index.is_edge(map.apply(e))) return false;
  }
  std::size_t in_dom = 0;
  std::size_t in_img = 0;
  for (VertexSet e : gamma.edges()) {
    in_dom += is_subset(e, dom) ? 1 : 0;
    in_img += is_subset(e, img) ? 1 : 0;
  }
  return in_dom == in_img;
}

std::vector<VertexMap> automorphisms(const AccessStructure& gamma, int cap) {
  check_cap(gamma, cap);
  const int n = gamma.size();
  EdgeIndex index(gamma);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = gamma.degree(v);

  std::vector<VertexMap> out;
  PartialMap map;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::vector<int> img(map.fwd.begin(), map.fwd.begin() + n);
      out.push_back(VertexMap::from_permutation(std::move(img)));
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (contains(map.img, u) || deg[static_cast<std::size_t>(u)] != deg[static_cast<std::size_t>(v)]) continue;
      if (!index.consistent(map, v, u)) continue;
      map.set(v, u);
      self(self, v + 1);
      map.unset(v, u);
    }
  };
  extend(extend, 0);
  return out;
}

bool extends_to_automorphism(std::span<const VertexMap> auts, const VertexMap& map) {
  return std::any_of(auts.begin(), auts.end(), [&](const VertexMap& g) {
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (g.image()[static_cast<std::size_t>(map.domain()[i])] != map.image()[i]) return false;
    }
    return true;
  });
}

FullSymmetryResult is_fully_symmetric(const AccessStructure& gamma, int size_cap, int cap) {
  check_cap(gamma, cap);
  const int n = gamma.size();
  const auto auts = automorphisms(gamma, cap);
  EdgeIndex index(gamma);
  FullSymmetryResult result;
  PartialMap map;
  std::vector<std::pair<int, int>> pairs;

  std::vector<std::size_t> all(auts.size());
  std::iota(all.begin(), all.end(), 0);

  auto grow = [&](auto&& self, int first, const std::vector<std::size_t>& agreeing) -> bool {
    if (static_cast<int>(pairs.size()) >= size_cap) return true;
    for (int s = first; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (contains(map.img, t) || !index.consistent(map, s, t)) continue;
        ++result.examined;
        std::vector<std::size_t> still;
        for (std::size_t g : agreeing) {
          if (auts[g].image()[static_cast<std::size_t>(s)] == t) still.push_back(g);
        }
        pairs.emplace_back(s, t);
        if (still.empty()) {
          std::vector<int> dom;
          std::vector<int> img;
          for (auto [a, b] : pairs) {
            dom.push_back(a);
            img.push_back(b);
          }
          result.fully_symmetric = false;
          result.witness = VertexMap(std::move(dom), std::move(img));
          return false;
        }
        map.set(s, t);
        bool ok = self(self, s + 1, still);
        map.unset(s, t);
        pairs.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };
  grow(grow, 0, all);
  return result;
}

// ---------------------------------------------------------------------------
// Blowups and families

std::vector<int> blowup_offsets(std::span<const int> class_sizes) {
  std::vector<int> off(class_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < class_sizes.size(); ++i) off[i + 1] = off[i] + class_sizes[i];
  return off;
}

AccessStructure blowup(const AccessStructure& gamma, std::span<const int> class_sizes) {
  if (static_cast<int>(class_sizes.size()) != gamma.size()) {
    throw Error(ErrorCode::BadParam, "blowup needs one class size per vertex");
  }
  for (int c : class_sizes) {
    if (c < 1) throw Error(ErrorCode::ZeroClass, "every class must be nonempty");
  }
  auto off = blowup_offsets(class_sizes);
  if (off.back() > kMaxVertices) throw Error(ErrorCode::BadParam, "blowup exceeds the vertex limit");

  std::vector<VertexSet> edges;
  for (VertexSet e : gamma.edges()) {
    auto verts = members(e);
    // Odometer over one representative per class.
    std::vector<int> pick(verts.size(), 0);
    while (true) {
      VertexSet m = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        m |= bit(off[static_cast<std::size_t>(verts[i])] + pick[i]);
      }
      edges.push_back(m);
      std::size_t i = 0;
      for (; i < verts.size(); ++i) {
        if (++pick[i] < class_sizes[static_cast<std::size_t>(verts[i])]) break;
        pick[i] = 0;
      }
      if (i == verts.size()) break;
    }
  }
  return sperner_reduce(off.back(), std::move(edges));
}

namespace family {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParam, what);
}
}  // namespace

AccessStructure path(int n) {
  require(n >= 1 && n <= kMaxVertices, "path: n must be in 1..64");
  std::vector<VertexSet> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back(bit(i) | bit(i + 1));
  return AccessStructure(n, std::move(e));
}

AccessStructure cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: n must be in 3..64");
  std::vector<VertexSet> e;
  for (int i = 0; i < n; ++i) e.push_back(bit(i) | bit((i + 1) % n));
  return AccessStructure(n, std::move(e));
}

AccessStructure complete(int n) { return threshold(n, 2); }

AccessStructure star_plus_isolated(int d, int m) {
  require(d >= 1 && m >= 0 && 1 + d + m <= kMaxVertices, "star: need d >= 1, m >= 0");
  std::vector<VertexSet> e;
  for (int i = 1; i <= d; ++i) e.push_back(bit(0) | bit(i));
  return AccessStructure(1 + d + m, std::move(e));
}

AccessStructure tree_tn(int n) {
  require(n >= 3 && n <= kMaxVertices, "tree-tn: n must be in 3..64");
  int d = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while ((d + 1) * (d + 1) <= n) ++d;
  while (d * d > n) --d;
  const int m = n - d - 2;
  require(m >= 0, "tree-tn: n too small");
  std::vector<VertexSet> e;
  for (int i = 1; i <= d; ++i) e.push_back(bit(0) | bit(i));
  const int apex = n - 1;
  e.push_back(bit(0) | bit(apex));
  for (int i = d + 1; i <= d + m; ++i) e.push_back(bit(i) | bit(apex));
  return AccessStructure(n, std::move(e));
}

AccessStructure threshold(int n, int k) {
  require(n >= 1 && n <= 30 && k >= 1 && k <= n, "threshold: need 1 <= k <= n <= 30");
  std::vector<VertexSet> e;
  for (VertexSet s = 0; s < bit(n); ++s) {
    if (popcount(s) == k) e.push_back(s);
  }
  return AccessStructure(n, std::move(e));
}

AccessStructure complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "complete-multipartite: need at least one part");
  for (int s : part_sizes) require(s >= 1, "complete-multipartite: parts must be nonempty");
  if (part_sizes.size() == 1) {
    return edgeless(part_sizes[0]);
  }
  return blowup(complete(static_cast<int>(part_sizes.size())), part_sizes);
}

AccessStructure cube_graph(int dim) {
  require(dim >= 1 && dim <= 6, "cube: dim must be in 1..6");
  const int n = 1 << dim;
  std::vector<VertexSet> e;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (v < w) e.push_back(bit(v) | bit(w));
    }
  }
  return AccessStructure(n, std::move(e));
}

AccessStructure petersen() {
  std::vector<VertexSet> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(bit(i) | bit((i + 1) % 5));
    e.push_back(bit(i) | bit(i + 5));
    e.push_back(bit(i + 5) | bit((i + 2) % 5 + 5));
  }
  return AccessStructure(10, std::move(e));
}

AccessStructure edgeless(int n) {
  require(n >= 0 && n <= kMaxVertices, "edgeless: n out of range");
  return AccessStructure(n, {});
}

}  // namespace family

}  // namespace olss
