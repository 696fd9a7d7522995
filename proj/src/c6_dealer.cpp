#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <string>

#include "iso_tracker.hpp"
#include "olss/constructions.hpp"
#include "olss/error.hpp"

namespace olss {

namespace {

const PrimeField kGF2{2};

// Basis order a, b, c, d, e, x, y.
enum Sym { A, B, C, D, E, X, Y };

AffineForm sum(std::initializer_list<int> symbols) {
  FieldRow row = FieldRow::Zero(kC6BaseDim);
  for (int s : symbols) row(s) = (row(s) + 1) % 2;
  return AffineForm(row);
}

// f = a+b+c+d+e and z = x+y.
const std::initializer_list<int> kF = {A, B, C, D, E};

AffineForm with_f(std::initializer_list<int> extra) {
  FieldRow row = sum(kF).coeffs;
  for (int s : extra) row(s) = (row(s) + 1) % 2;
  return AffineForm(row);
}

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorCode::DealerFailure, why); }

std::string xi(int share) { return "xi" + std::to_string(share); }

// Share indices on the common part of both cycles, in preference order.
constexpr std::array<int, 4> kCommon = {1, 2, 4, 5};

AccessStructure common_matching() {
  // Labels are share indices minus one; only 1-2 and 4-5 are adjacent.
  return AccessStructure(8, {make_set({0, 1}), make_set({3, 4})});
}

class C6Dealer final : public Dealer {
 public:
  C6Dealer() : common_(common_matching()) {}

  PrimeField field() const override { return kGF2; }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    for (int i = 0; i < kC6BaseDim; ++i) space.mint();
    table_ = c6_share_table();
    return table_[0];
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace&) override {
    const auto& edges = event.backward_edges;
    int share = 0;
    if (!cycle_) {
      for (int s : kCommon) {
        if (common_.consistent(edges, s - 1)) {
          share = s;
          break;
        }
      }
      if (share != 0) {
        common_.push(edges, share - 1);
        note_ = xi(share);
      } else {
        share = commit(edges);
      }
    } else {
      auto pos = tracker_->choose(edges, order_);
      if (!pos) fail("no share keeps the isomorphism to the committed cycle");
      tracker_->push(edges, *pos);
      share = cycle_[*pos];
      note_ = xi(share);
    }
    history_.push_back(edges);
    shares_.push_back(share);
    return table_[static_cast<std::size_t>(share)];
  }

  std::optional<Rational> declared_bound() const override { return make_rational(3, 2); }
  std::string note() const override { return note_; }

 private:
  int commit(const std::vector<VertexSet>& edges) {
    const std::array<std::pair<const int*, const char*>, 2> options = {{{kC6Sigma, "Sigma"}, {kC6Pi, "Pi"}}};
    for (const auto& [cyc, name] : options) {
      detail::IsoTracker tracker(family::cycle(6));
      std::array<int, 9> position{};
      for (int i = 0; i < 6; ++i) position[static_cast<std::size_t>(cyc[i])] = i;
      for (std::size_t t = 0; t < shares_.size(); ++t) {
        tracker.push(history_[t], position[static_cast<std::size_t>(shares_[t])]);
      }
      std::vector<int> order(6);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [cyc](int i, int j) { return cyc[i] < cyc[j]; });
      if (auto pos = tracker.choose(edges, order)) {
        tracker.push(edges, *pos);
        tracker_ = std::move(tracker);
        cycle_ = cyc;
        order_ = std::move(order);
        note_ = std::string("commit ") + name + ": " + xi(cyc[*pos]);
        return cyc[*pos];
      }
    }
    fail("neither cycle admits a consistent assignment");
  }

  detail::IsoTracker common_;
  std::optional<detail::IsoTracker> tracker_;
  const int* cycle_ = nullptr;
  std::vector<int> order_;
  std::vector<std::vector<AffineForm>> table_;
  std::vector<std::vector<VertexSet>> history_;
  std::vector<int> shares_;
  std::string note_;
};

class SymmetricLiftDealer final : public Dealer {
 public:
  SymmetricLiftDealer(std::shared_ptr<const LinearScheme> offline, const detail::IsoTracker& fresh)
      : offline_(std::move(offline)), tracker_(fresh) {}

  PrimeField field() const override { return offline_->field(); }

  std::vector<AffineForm> start(SymbolSpace& space) override {
    for (int i = 0; i < offline_->base_dim(); ++i) space.mint();
    return offline_->secret();
  }

  std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace&) override {
    std::vector<int> candidates(static_cast<std::size_t>(tracker_.model().size()));
    std::iota(candidates.begin(), candidates.end(), 0);
    auto v = tracker_.choose(event.backward_edges, candidates);
    if (!v) fail("no vertex image extends the isomorphism at step " + std::to_string(event.step));
    tracker_.push(event.backward_edges, *v);
    note_ = "as " + std::to_string(*v);
    return offline_->share(*v);
  }

  std::optional<Rational> declared_bound() const override { return complexity(*offline_); }
  std::string note() const override { return note_; }

 private:
  std::shared_ptr<const LinearScheme> offline_;
  detail::IsoTracker tracker_;
  std::string note_;
};

}  // namespace

std::vector<std::vector<AffineForm>> c6_share_table() {
  return {
      {sum({X}), sum({Y}), sum({X, Y})},                        // secret (x, y, z)
      {sum({A}), sum({B, X}), sum({C})},                        // ξ1
      {sum({B}), sum({C, Y}), sum({D})},                        // ξ2
      {sum({C}), sum({D, X, Y}), sum({E})},                     // ξ3
      {sum({D}), sum({E, X}), with_f({})},                      // ξ4
      {sum({E}), with_f({Y}), sum({A})},                        // ξ5
      {with_f({}), sum({A, X, Y}), sum({B})},                   // ξ6
      {sum({C}), sum({B, C, D, X}), sum({E, X})},               // ξ7
      {with_f({Y}), sum({A, B, C, Y}), sum({B})},               // ξ8
  };
}

LinearScheme c6_offline(const int (&cycle)[6]) {
  auto table = c6_share_table();
  std::vector<std::vector<AffineForm>> shares;
  for (int share : cycle) shares.push_back(table.at(static_cast<std::size_t>(share)));
  return LinearScheme(kGF2, kC6BaseDim, table[0], std::move(shares));
}

DealerFactory c6_optimal() {
  return [] { return std::make_unique<C6Dealer>(); };
}

DealerFactory symmetric_lift(const LinearScheme& offline, const AccessStructure& gamma) {
  if (offline.participants() != gamma.size()) {
    throw Error(ErrorCode::SizeMismatch, "off-line scheme and structure disagree on participant count");
  }
  if (!is_perfect(offline, gamma).perfect) throw Error(ErrorCode::BadParam, "off-line scheme is not perfect");
  auto shared = std::make_shared<const LinearScheme>(offline);
  auto fresh = std::make_shared<const detail::IsoTracker>(gamma);
  return [shared, fresh] { return std::make_unique<SymmetricLiftDealer>(shared, *fresh); };
}

}  // namespace olss
