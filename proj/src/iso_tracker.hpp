#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "olss/access.hpp"

namespace olss::detail {

// Maintains an induced isomorphism between the emerging structure (over
// arrival indices) and a substructure of a fixed model structure. A candidate
// image is "safe" when every induced embedding of the emerged prefix into the
// model lies in the automorphism orbit of the maintained map, i.e. the map
// extends to an isomorphism for every completion of the prefix.
class IsoTracker {
 public:
  explicit IsoTracker(AccessStructure model);

  const AccessStructure& model() const { return model_; }
  const std::vector<int>& images() const { return images_; }
  VertexSet used() const { return used_; }

  // Whether mapping the next arrival (with these backward edges) to v keeps an
  // induced isomorphism.
  bool consistent(std::span<const VertexSet> backward_edges, int v) const;
  bool safe(std::span<const VertexSet> backward_edges, int v) const;

  // First candidate (in the given order) that is consistent and safe.
  std::optional<int> choose(std::span<const VertexSet> backward_edges, std::span<const int> candidates) const;

  void push(std::span<const VertexSet> backward_edges, int v);

 private:
  bool step_ok(std::span<const int> images, VertexSet image_set, std::span<const VertexSet> backward_edges,
               int v) const;
  std::size_t count_embeddings(std::size_t limit) const;
  std::size_t orbit_size(std::span<const int> images) const;

  AccessStructure model_;
  std::shared_ptr<const std::vector<VertexMap>> automorphisms_;
  std::vector<std::vector<VertexSet>> history_;
  std::vector<int> images_;
  VertexSet used_ = 0;
};

}  // namespace olss::detail
