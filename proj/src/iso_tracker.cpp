#include "iso_tracker.hpp"

#include <algorithm>
#include <set>

namespace olss::detail {

IsoTracker::IsoTracker(AccessStructure model)
    : model_(std::move(model)), automorphisms_(std::make_shared<const std::vector<VertexMap>>(automorphisms(model_))) {}

bool IsoTracker::step_ok(std::span<const int> images, VertexSet image_set, std::span<const VertexSet> backward_edges,
                         int v) const {
  if (contains(image_set, v)) return false;
  const int index = static_cast<int>(images.size());
  const auto& edges = model_.edges();
  for (VertexSet e : backward_edges) {
    VertexSet mapped = bit(v);
    for (int q : members(e & ~bit(index))) mapped |= bit(images[static_cast<std::size_t>(q)]);
    if (std::find(edges.begin(), edges.end(), mapped) == edges.end()) return false;
  }
  // Backward edges map injectively, so matching counts means equal sets.
  const VertexSet scope = image_set | bit(v);
  std::size_t closing = 0;
  for (VertexSet e : edges) {
    if (contains(e, v) && is_subset(e, scope)) ++closing;
  }
  return closing == backward_edges.size();
}

bool IsoTracker::consistent(std::span<const VertexSet> backward_edges, int v) const {
  return v >= 0 && v < model_.size() && step_ok(images_, used_, backward_edges, v);
}

std::size_t IsoTracker::count_embeddings(std::size_t limit) const {
  const int n = model_.size();
  const std::size_t k = history_.size();
  std::vector<int> images;
  std::size_t count = 0;
  auto dfs = [&](auto&& self, VertexSet used) -> void {
    if (count > limit) return;
    if (images.size() == k) {
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!step_ok(images, used, history_[images.size()], v)) continue;
      images.push_back(v);
      self(self, used | bit(v));
      images.pop_back();
      if (count > limit) return;
    }
  };
  dfs(dfs, 0);
  return count;
}

std::size_t IsoTracker::orbit_size(std::span<const int> images) const {
  std::set<std::vector<int>> orbit;
  for (const auto& g : *automorphisms_) {
    std::vector<int> moved;
    moved.reserve(images.size());
    for (int v : images) moved.push_back(g(v));
    orbit.insert(std::move(moved));
  }
  return orbit.size();
}

bool IsoTracker::safe(std::span<const VertexSet> backward_edges, int v) const {
  if (!consistent(backward_edges, v)) return false;
  IsoTracker next = *this;
  next.push(backward_edges, v);
  const std::size_t orbit = next.orbit_size(next.images_);
  return next.count_embeddings(orbit) == orbit;
}

std::optional<int> IsoTracker::choose(std::span<const VertexSet> backward_edges,
                                      std::span<const int> candidates) const {
  for (int v : candidates) {
    if (safe(backward_edges, v)) return v;
  }
  return std::nullopt;
}

void IsoTracker::push(std::span<const VertexSet> backward_edges, int v) {
  history_.emplace_back(backward_edges.begin(), backward_edges.end());
  images_.push_back(v);
  used_ |= bit(v);
}

}  // namespace olss::detail
