#include <deque>
#include <map>
#include <memory>
#include <string>

#include "olss/constructions.hpp"
#include "olss/error.hpp"

namespace olss {

namespace {

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorCode::DealerFailure, why); }

std::vector<int> graph_neighbors(const ArrivalEvent& event) {
  for (VertexSet e : event.backward_edges) {
    if (popcount(e) != 2) fail("star packing needs pair edges");
  }
  return event.backward_neighbors();
}

// One copy of the on-line star packing: a two-dimensional secret, star vectors
// v_α = (1, α) handed out in index order, and per participant the centers and
// leaves it holds.
class PackingCopy {
 public:
  PackingCopy(PrimeField field, int d, int vector_cap, SymbolSpace& space)
      : field_(field), d_(d), vector_cap_(vector_cap), s0_(space.fresh()), s1_(space.fresh()) {}

  std::vector<AffineForm> secret() const { return {s0_, s1_}; }

  // <s, v_α> for a freshly drawn α.
  std::pair<int, AffineForm> draw_vector() {
    if (next_alpha_ >= vector_cap_) fail("star vectors exhausted");
    const int alpha = next_alpha_++;
    return {alpha, add(s0_, scale(s1_, alpha, field_), field_)};
  }

  // Centers for `center_nb` (each joined to a free leaf of that neighbour),
  // `random_centers` unconnected ones, the `extra` centers supplied by the
  // caller, then d leaves: the first joined to center 1 of each of `leaf_nb`,
  // the rest fresh.
  std::vector<AffineForm> arrive(const std::vector<int>& center_nb, int random_centers,
                                 std::vector<std::pair<int, AffineForm>> extra, const std::vector<int>& leaf_nb,
                                 SymbolSpace& space) {
    Holder h;
    for (int w : center_nb) {
      auto [alpha, inner] = draw_vector();
      h.centers.emplace_back(alpha, subtract(inner, take_free_leaf(w), field_));
    }
    for (int i = 0; i < random_centers; ++i) {
      auto [alpha, inner] = draw_vector();
      h.centers.emplace_back(alpha, space.fresh());
    }
    for (auto& c : extra) h.centers.push_back(std::move(c));
    for (int w : leaf_nb) {
      const auto& centers = holders_.at(static_cast<std::size_t>(w)).centers;
      if (centers.empty()) fail("participant " + std::to_string(w + 1) + " holds no center");
      const auto& [alpha, value] = centers.front();
      const AffineForm inner = add(s0_, scale(s1_, alpha, field_), field_);
      h.leaves.push_back(subtract(inner, value, field_));
    }
    h.next_free = static_cast<int>(h.leaves.size());
    while (static_cast<int>(h.leaves.size()) < d_) h.leaves.push_back(space.fresh());

    std::vector<AffineForm> share;
    for (const auto& c : h.centers) share.push_back(c.second);
    share.insert(share.end(), h.leaves.begin(), h.leaves.end());
    holders_.push_back(std::move(h));
    return share;
  }

 private:
  struct Holder {
    std::vector<std::pair<int, AffineForm>> centers;
    std::vector<AffineForm> leaves;
    int next_free = 0;
  };

  AffineForm take_free_leaf(int w) {
    auto& h = holders_.at(static_cast<std::size_t>(w));
    if (h.next_free >= static_cast<int>(h.leaves.size())) {
      fail("participant " + std::to_string(w + 1) + " has no unused leaf");
    }
    return h.leaves[static_cast<std::size_t>(h.next_free++)];
  }

  PrimeField field_;
  int d_;
  int vector_cap_;
  AffineForm s0_, s1_;
  int next_alpha_ = 0;
  std::vector<Holder> holders_;
};

class StarPackingDealer final : public Dealer {
 public:
  StarPackingDealer(int n, int d) : n_(n), d_(d), field_(smallest_prime_at_least(std::int64_t{d} * n + 1)) {}

  PrimeField field() const override { return field_; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    copy_.emplace(field_, d_, d_ * n_, space);
    return copy_->secret();
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace& space) override {
    const auto nb = graph_neighbors(event);
    const int m = static_cast<int>(nb.size());
    if (m > d_) fail("backward degree " + std::to_string(m) + " exceeds d = " + std::to_string(d_));
    return copy_->arrive(nb, m == 0 ? 1 : 0, {}, nb, space);
  }

  std::optional<Rational> declared_bound() const override { return Rational(d_); }

 private:
  int n_, d_;
  PrimeField field_;
  std::optional<PackingCopy> copy_;
};

class ImprovedDealer final : public Dealer {
 public:
  ImprovedDealer(int n, int d, int k)
      : n_(n), d_(d), k_(k), field_(smallest_prime_at_least(std::int64_t{d} * n + 1)) {}

  PrimeField field() const override { return field_; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    std::vector<AffineForm> secret;
    for (int i = 0; i < k_; ++i) {
      copies_.emplace_back(field_, d_, d_ * n_, space);
      auto s = copies_.back().secret();
      secret.insert(secret.end(), s.begin(), s.end());
    }
    return secret;
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace& space) override {
    const auto nb = graph_neighbors(event);
    const int m = static_cast<int>(nb.size());
    if (m > d_) fail("backward degree " + std::to_string(m) + " exceeds d = " + std::to_string(d_));
    std::vector<AffineForm> share;
    auto append = [&share](std::vector<AffineForm> part) { share.insert(share.end(), part.begin(), part.end()); };

    if (m < d_) {
      for (auto& copy : copies_) append(copy.arrive(nb, m == 0 ? 1 : 0, {}, nb, space));
      append(special_leaves(event.index(), space));
      note_ = "low";
      return share;
    }

    // Full backward degree: copy 0 joins x and y through one special center.
    const int x = nb[0], y = nb[1];
    auto pool = pools_.find({x, y});
    if (pool == pools_.end() || pool->second.empty()) {
      fail("no shared special leaf left for participants " + std::to_string(x + 1) + " and " + std::to_string(y + 1));
    }
    const AffineForm shared = pool->second.front();
    pool->second.pop_front();
    auto& first = copies_.front();
    auto [alpha, inner] = first.draw_vector();
    std::vector<std::pair<int, AffineForm>> special{{alpha, subtract(inner, shared, field_)}};
    append(first.arrive(std::vector<int>(nb.begin() + 2, nb.end()), 0, std::move(special), nb, space));
    for (std::size_t i = 1; i < copies_.size(); ++i) append(copies_[i].arrive(nb, 0, {}, nb, space));
    note_ = "full, special center on " + std::to_string(x + 1) + "," + std::to_string(y + 1);
    return share;
  }

  std::optional<Rational> declared_bound() const override { return Rational(d_) - make_rational(1, 2L * k_); }
  std::string note() const override { return note_; }

 private:
  struct Low {
    int index;
    std::vector<AffineForm> special;
    std::size_t next_unused = 0;
  };

  // d(n-1) special leaves: d shared with each earlier low participant, the
  // rest fresh.
  std::vector<AffineForm> special_leaves(int index, SymbolSpace& space) {
    const std::size_t total = static_cast<std::size_t>(d_) * static_cast<std::size_t>(n_ - 1);
    Low self{index, {}, 0};
    for (auto& u : lows_) {
      auto& pool = pools_[{u.index, index}];
      for (int i = 0; i < d_; ++i) {
        if (u.next_unused >= u.special.size()) fail("special leaves exhausted");
        const AffineForm& value = u.special[u.next_unused++];
        self.special.push_back(value);
        pool.push_back(value);
      }
    }
    if (self.special.size() > total) fail("special leaves exhausted");
    self.next_unused = self.special.size();
    while (self.special.size() < total) self.special.push_back(space.fresh());
    lows_.push_back(self);
    return self.special;
  }

  int n_, d_, k_;
  PrimeField field_;
  std::vector<PackingCopy> copies_;
  std::vector<Low> lows_;
  std::map<std::pair<int, int>, std::deque<AffineForm>> pools_;
  std::string note_;
};

}  // namespace

DealerFactory online_star_packing(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::BadParam, "star packing needs n >= 1 and d >= 1");
  return [n, d] { return std::make_unique<StarPackingDealer>(n, d); };
}

bool improved_k_feasible(int n, int d, int k) {
  return std::int64_t{d} * (n - 1) + std::int64_t{2 * d - 1} * k <= std::int64_t{2} * d * k - 1;
}

DealerFactory improved_graph_online(int n, int d, std::optional<int> k) {
  if (n < 2 || d < 2) throw Error(ErrorCode::BadParam, "improved scheme needs n >= 2 and d >= 2");
  const int copies = k.value_or(d * n);
  if (copies < 1 || !improved_k_feasible(n, d, copies)) {
    throw Error(ErrorCode::BadParam, "k = " + std::to_string(copies) + " violates d(n-1) + (2d-1)k <= 2dk - 1");
  }
  return [n, d, copies] { return std::make_unique<ImprovedDealer>(n, d, copies); };
}

}  // namespace olss
