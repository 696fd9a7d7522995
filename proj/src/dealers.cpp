#include <deque>
#include <memory>
#include <string>

#include "olss/constructions.hpp"
#include "olss/error.hpp"

namespace olss {

namespace {

const PrimeField kGF2{2};

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorCode::DealerFailure, why); }

class P3SampleDealer final : public Dealer {
 public:
  PrimeField field() const override { return kGF2; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    r_ = space.fresh();
    t_ = space.fresh();
    return {add(r_, t_, kGF2)};
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace&) override {
    const auto nb = event.backward_neighbors();
    for (VertexSet e : event.backward_edges) {
      if (popcount(e) != 2) fail("P3 has only pair edges");
    }
    switch (event.step) {
      case 1:
        return {r_};
      case 2:
        first_pair_qualified_ = !nb.empty();
        return {first_pair_qualified_ ? t_ : r_};
      case 3:
        if (!first_pair_qualified_) {
          if (nb.size() != 2) fail("emerging graph is not an induced subgraph of P3");
          return {t_};
        }
        if (nb.size() != 1) fail("emerging graph is not an induced subgraph of P3");
        // Connected to A: same share as B; connected to B: same share as A.
        return {nb[0] == 0 ? t_ : r_};
      default:
        fail("P3 has three participants");
    }
  }

  std::optional<Rational> declared_bound() const override { return Rational(1); }

 private:
  AffineForm r_, t_;
  bool first_pair_qualified_ = false;
};

class FirstFitGeneralDealer final : public Dealer {
 public:
  explicit FirstFitGeneralDealer(int d) : d_(d) {}

  PrimeField field() const override { return kGF2; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    s_ = space.fresh();
    return {s_};
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace& space) override {
    const int m = static_cast<int>(event.backward_edges.size());
    if (m > d_) fail("backward degree " + std::to_string(m) + " exceeds d = " + std::to_string(d_));
    std::vector<AffineForm> share;
    for (VertexSet e : event.backward_edges) {
      AffineForm closing = s_;
      for (int q : members(e & ~bit(event.index()))) {
        auto& pool = unassigned_[static_cast<std::size_t>(q)];
        if (pool.empty()) fail("participant " + std::to_string(q + 1) + " has no unassigned bit left");
        closing = add(closing, pool.front(), kGF2);
        pool.pop_front();
      }
      share.push_back(std::move(closing));
    }
    auto& own = unassigned_.emplace_back();
    for (int i = m; i < d_; ++i) {
      own.push_back(space.fresh());
      share.push_back(own.back());
    }
    return share;
  }

  std::optional<Rational> declared_bound() const override { return Rational(d_); }

 private:
  int d_;
  AffineForm s_;
  std::vector<std::deque<AffineForm>> unassigned_;
};

class FirstFitGraphDealer final : public Dealer {
 public:
  explicit FirstFitGraphDealer(std::optional<int> d) : d_(d) {}

  PrimeField field() const override { return kGF2; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    s_ = space.fresh();
    return {s_};
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace& space) override {
    for (VertexSet e : event.backward_edges) {
      if (popcount(e) != 2) fail("graph first-fit needs pair edges");
    }
    const auto nb = event.backward_neighbors();
    const int m = static_cast<int>(nb.size());
    if (d_ && m > *d_) fail("backward degree " + std::to_string(m) + " exceeds d = " + std::to_string(*d_));
    std::vector<AffineForm> share;
    AffineForm own;
    if (!d_ || m < *d_) {
      own = space.fresh();
      share.push_back(own);
    }
    random_bit_.push_back(own);
    for (int q : nb) {
      const auto& rq = random_bit_[static_cast<std::size_t>(q)];
      // Neighbors with d backward edges never see a forward edge.
      if (rq.is_zero()) fail("participant " + std::to_string(q + 1) + " holds no random bit");
      share.push_back(add(rq, s_, kGF2));
    }
    return share;
  }

  std::optional<Rational> declared_bound() const override {
    if (d_) return Rational(*d_);
    return std::nullopt;
  }

 private:
  std::optional<int> d_;
  AffineForm s_;
  std::vector<AffineForm> random_bit_;
};

}  // namespace

DealerFactory p3_sample() {
  return [] { return std::make_unique<P3SampleDealer>(); };
}

DealerFactory first_fit_general(int d) {
  if (d < 1) throw Error(ErrorCode::BadParam, "first-fit needs d >= 1");
  return [d] { return std::make_unique<FirstFitGeneralDealer>(d); };
}

DealerFactory first_fit_graph() {
  return [] { return std::make_unique<FirstFitGraphDealer>(std::nullopt); };
}

DealerFactory first_fit_graph_known_d(int d) {
  if (d < 1) throw Error(ErrorCode::BadParam, "first-fit needs d >= 1");
  return [d] { return std::make_unique<FirstFitGraphDealer>(d); };
}

}  // namespace olss
