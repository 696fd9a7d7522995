#include <doctest.h>

#include <atomic>
#include <memory>

#include "olss/constructions.hpp"
#include "olss/error.hpp"
#include "olss/online.hpp"
#include "oracles.hpp"

using namespace olss;

namespace {

// Hands out a number of fresh symbols that depends on how many runs came
// before it: information a dealer restricted to its view could not have.
class RiggedDealer : public Dealer {
 public:
  explicit RiggedDealer(int run) : run_(run) {}
  PrimeField field() const override { return PrimeField(2); }
  std::vector<AffineForm> start(SymbolSpace& space) override { return {space.fresh()}; }
  std::vector<AffineForm> on_arrival(const ArrivalEvent&, SymbolSpace& space) override {
    std::vector<AffineForm> out{space.fresh()};
    if (run_ % 2) out.push_back(space.fresh());
    return out;
  }

 private:
  int run_;
};

AccessStructure relabel_by_arrival(const AccessStructure& g, const std::vector<int>& perm) {
  std::vector<int> pos(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) pos[static_cast<std::size_t>(perm[t])] = static_cast<int>(t);
  std::vector<VertexSet> edges;
  for (VertexSet e : g.edges()) edges.push_back(oracle::map_set(e, pos));
  return AccessStructure(g.size(), edges);
}

}  // namespace

TEST_CASE("arrival events") {
  const std::vector<int> order{0, 1, 2};
  for (const auto& ev : arrival_events(family::edgeless(3), order)) CHECK(ev.backward_edges.empty());

  const std::vector<int> perm{2, 0, 1};
  const auto ev = arrival_events(family::path(3), perm);
  CHECK(ev[0].backward_edges.empty());
  CHECK(ev[1].backward_edges.empty());
  CHECK(ev[2].backward_edges == std::vector{make_set({0, 2}), make_set({1, 2})});
  CHECK(ev[2].backward_neighbors() == std::vector{0, 1});
}

TEST_CASE("runs reject singleton edges and non-permutations") {
  auto dealer = first_fit_general(1)();
  const AccessStructure single(2, {make_set({0})});
  const std::vector<int> order{0, 1}, bad{0, 0};
  CHECK_THROWS_AS(run(*dealer, single, order), Error);
  CHECK_THROWS_AS(run(*first_fit_general(1)(), family::path(2), bad), Error);
}

TEST_CASE("first-fit on the three-vertex path, end-middle-end") {
  auto dealer = first_fit_general(2)();
  const std::vector<int> order{0, 1, 2};
  const auto tr = run(*dealer, family::path(3), order);
  CHECK(complexity(tr.scheme) == 2);
  CHECK(tr.assigned[0].size() == 2);
  CHECK(tr.assigned[1].size() == 2);
  CHECK(is_perfect(tr.scheme, family::path(3)).perfect);
}

TEST_CASE("sample scheme: third participant gets t after a non-adjacent pair") {
  auto dealer = p3_sample()();
  const std::vector<int> order{0, 2, 1};
  const auto tr = run(*dealer, family::path(3), order);
  REQUIRE(tr.assigned[0].size() == 1);
  CHECK(same_form(tr.assigned[0][0], tr.assigned[1][0]));
  CHECK_FALSE(same_form(tr.assigned[0][0], tr.assigned[2][0]));
  CHECK(complexity(tr.scheme) == 1);
}

TEST_CASE("emerging structure equals the relabeled structure") {
  const auto gamma = family::cycle(5);
  for (const auto& perm : sample_permutations(5, 20, 9)) {
    auto dealer = first_fit_graph()();
    const auto tr = run(*dealer, gamma, perm);
    CHECK(emerging_structure(tr) == relabel_by_arrival(gamma, perm));
  }
}

TEST_CASE("exhaustive sweeps") {
  const auto ff = sweep(first_fit_general(2), family::path(6), SweepMode::all(), {4, false});
  CHECK(ff.runs.size() == 720);
  CHECK(ff.all_perfect);
  CHECK(ff.worst_complexity == 2);
  CHECK(std::is_sorted(ff.runs.begin(), ff.runs.end(),
                       [](const auto& a, const auto& b) { return a.permutation < b.permutation; }));

  const auto lift = sweep(symmetric_lift(shamir_threshold(3, 2), family::complete(3)), family::complete(3),
                          SweepMode::all());
  CHECK(lift.runs.size() == 6);
  CHECK(lift.all_perfect);
  CHECK(lift.worst_complexity == 1);
}

TEST_CASE("sweep worst complexity bounds every run and respects declared bounds") {
  const auto gamma = family::cycle(5);
  const auto factory = online_star_packing(5, 2);
  const auto bound = factory()->declared_bound();
  REQUIRE(bound);
  const auto result = sweep(factory, gamma, SweepMode::all(), {2, true});
  for (const auto& r : result.runs) {
    REQUIRE(r.report);
    CHECK(r.report->complexity <= result.worst_complexity);
    CHECK(r.report->complexity <= *bound);
    REQUIRE(r.transcript);
    CHECK(complexity(r.transcript->scheme) == r.report->complexity);
  }
}

TEST_CASE("sampled sweeps are reproducible and independent of worker count") {
  const auto a = sweep(first_fit_graph(), family::cycle(4), SweepMode::sample(10, 7), {1, false});
  const auto b = sweep(first_fit_graph(), family::cycle(4), SweepMode::sample(10, 7), {3, false});
  REQUIRE(a.runs.size() == 10);
  CHECK(a.all_perfect);
  CHECK(a.seed == std::optional<std::uint64_t>(7));
  for (std::size_t i = 0; i < a.runs.size(); ++i) CHECK(a.runs[i].permutation == b.runs[i].permutation);
  CHECK(sample_permutations(6, 5, 1) == sample_permutations(6, 5, 1));
  CHECK(sample_permutations(6, 5, 1) != sample_permutations(6, 5, 2));
}

TEST_CASE("exhaustive sweeps are capped") {
  CHECK_THROWS_AS(sweep(first_fit_graph(), family::path(9), SweepMode::all()), Error);
}

TEST_CASE("view determinism") {
  CHECK(check_view_determinism(first_fit_graph(), family::cycle(4)));
  CHECK(check_view_determinism(c6_optimal(), family::cycle(6)));
  auto runs = std::make_shared<std::atomic<int>>(0);
  const DealerFactory rigged = [runs] { return std::make_unique<RiggedDealer>((*runs)++); };
  CHECK_FALSE(check_view_determinism(rigged, family::path(3)));
}
