#include <doctest.h>

#include <random>

#include "olss/access.hpp"
#include "olss/error.hpp"
#include "oracles.hpp"

using namespace olss;

namespace {

AccessStructure matching4() { return AccessStructure(4, {make_set({0, 1}), make_set({2, 3})}); }

}  // namespace

TEST_CASE("sperner_reduce keeps only minimal sets") {
  CHECK(sperner_reduce(3, {make_set({0, 1}), make_set({0, 1, 2})}).edges() == std::vector{make_set({0, 1})});
  CHECK(sperner_reduce(3, {make_set({0, 1}), make_set({1, 2})}).edges().size() == 2);
  const auto g = sperner_reduce(4, {make_set({0}), make_set({0, 1}), make_set({2, 3})});
  CHECK(g.edges() == std::vector{make_set({0}), make_set({2, 3})});
  CHECK(g.has_singleton_edge());
}

TEST_CASE("sperner_reduce agrees with pairwise minimality on random families") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<VertexSet> pick(1, 63);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexSet> family(static_cast<std::size_t>(1 + trial % 7));
    for (auto& s : family) s = pick(rng);
    const auto reduced = sperner_reduce(6, family);
    const auto expected = oracle::minimal_sets(family);
    CHECK(std::set<VertexSet>(reduced.edges().begin(), reduced.edges().end()) == expected);
    CHECK(std::is_sorted(reduced.edges().begin(), reduced.edges().end(), lex_less));
  }
}

TEST_CASE("construction rejects malformed edge lists") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::IO;
  };
  CHECK(code([] { AccessStructure(3, {0}); }) == ErrorCode::EmptyEdge);
  CHECK(code([] { AccessStructure(3, {make_set({0, 1}), make_set({0, 1, 2})}); }) == ErrorCode::BadParam);
  CHECK(code([] { AccessStructure(2, {make_set({0, 2})}); }) == ErrorCode::BadParam);
}

TEST_CASE("degrees") {
  CHECK(max_degree(family::path(6)) == 2);
  CHECK(max_degree(family::star_plus_isolated(3, 2)) == 3);
  CHECK(max_degree(family::petersen()) == 3);
  for (int v = 0; v < 10; ++v) CHECK(family::petersen().degree(v) == 3);
  CHECK(max_degree(family::edgeless(4)) == 0);
}

TEST_CASE("induced substructures") {
  const auto sub = induced(family::cycle(6), make_set({0, 1, 2, 3, 4}));
  CHECK(sub.relabeled() == family::path(5));

  const auto h = induced(family::path(6), make_set({0, 1, 3, 4}));
  CHECK(h.relabeled() == matching4());
  CHECK(h.labels() == std::vector{0, 1, 3, 4});

  const auto empty = induced(family::path(6), 0);
  CHECK(empty.induced_edges.empty());
  CHECK(empty.relabeled().size() == 0);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(family::cycle(4)).size() == 8);
  CHECK(automorphisms(matching4()).size() == 8);
  CHECK(automorphisms(family::complete(3)).size() == 6);
  CHECK(automorphisms(family::petersen()).size() == 120);
}

TEST_CASE("automorphisms match exhaustive permutation search") {
  std::mt19937_64 rng(5);
  std::vector<AccessStructure> cases = {family::path(5), family::cycle(6), family::star_plus_isolated(2, 2),
                                        family::threshold(5, 3), family::cube_graph(2)};
  for (int i = 0; i < 15; ++i) cases.push_back(oracle::random_sperner(3 + i % 4, rng));
  for (const auto& g : cases) {
    std::set<std::vector<int>> ours;
    for (const auto& mu : automorphisms(g)) ours.insert(mu.image());
    const auto brute = oracle::all_automorphisms(g);
    CHECK(ours == std::set<std::vector<int>>(brute.begin(), brute.end()));
  }
}

TEST_CASE("vertex maps") {
  const VertexMap m({0, 2}, {3, 1});
  CHECK(m(2) == 1);
  CHECK(m.apply(make_set({0, 2})) == make_set({1, 3}));
  CHECK(m.domain_set() == make_set({0, 2}));
  CHECK_THROWS_AS(VertexMap({0, 1}, {2, 2}), Error);
  const auto id = VertexMap::from_permutation({0, 1, 2, 3});
  CHECK(m.compose(VertexMap({0, 2}, {0, 2})) == m);
  CHECK(id.compose(m) == m);
  CHECK(is_induced_isomorphism(family::path(4), VertexMap({0, 1}, {2, 3})));
  CHECK_FALSE(is_induced_isomorphism(family::path(4), VertexMap({0, 2}, {1, 2})));
}

TEST_CASE("full symmetry on known structures") {
  CHECK(is_fully_symmetric(family::cycle(5), 5).fully_symmetric);
  CHECK(is_fully_symmetric(family::complete(4), 4).fully_symmetric);
  const int parts[] = {2, 2};
  CHECK(is_fully_symmetric(family::complete_multipartite(parts), 4).fully_symmetric);

  const auto cube = family::cube_graph(3);
  const auto res = is_fully_symmetric(cube, 3);
  REQUIRE_FALSE(res.fully_symmetric);
  REQUIRE(res.witness);
  const auto& w = *res.witness;
  CHECK(is_induced_isomorphism(cube, w));
  CHECK_FALSE(extends_to_automorphism(automorphisms(cube), w));
  CHECK(w.size() == 3);
  // Swap adjacent a=000, b=001 and fix c=110, which is at distance 2 from a
  // and 3 from b.
  const VertexMap swap({0, 1, 6}, {1, 0, 6});
  CHECK(is_induced_isomorphism(cube, swap));
  CHECK_FALSE(extends_to_automorphism(automorphisms(cube), swap));

  const auto c7 = is_fully_symmetric(family::cycle(7), 7);
  REQUIRE_FALSE(c7.fully_symmetric);
  CHECK(is_induced_isomorphism(family::cycle(7), *c7.witness));
}

TEST_CASE("full symmetry agrees with exhaustive search") {
  std::mt19937_64 rng(23);
  std::vector<AccessStructure> cases = {family::path(4),      family::path(5),  family::cycle(6),
                                        family::threshold(4, 2), family::star_plus_isolated(2, 1)};
  for (int i = 0; i < 12; ++i) cases.push_back(oracle::random_sperner(4 + i % 2, rng));
  for (const auto& g : cases) {
    CHECK(is_fully_symmetric(g, g.size()).fully_symmetric == oracle::fully_symmetric(g, g.size()));
  }
}

TEST_CASE("blowup") {
  const int two_two[] = {2, 2};
  const auto c4 = blowup(family::complete(2), two_two);
  CHECK(c4 == family::complete_multipartite(two_two));
  CHECK(c4.edges().size() == 4);
  CHECK(automorphisms(c4).size() == 8);
  CHECK(blowup_offsets(two_two) == std::vector{0, 2, 4});

  const auto p5 = family::path(5);
  const std::vector<int> ones(5, 1);
  CHECK(blowup(p5, ones) == p5);

  const AccessStructure g0(3, {make_set({0, 1})});
  const int sizes[] = {1, 1, 4};
  const auto g = blowup(g0, sizes);
  CHECK(g.size() == 6);
  CHECK(g.edges() == std::vector{make_set({0, 1})});
  const int zero[] = {1, 0, 1};
  CHECK_THROWS_AS(blowup(g0, zero), Error);
}

TEST_CASE("family generators") {
  CHECK(family::path(6).edges().size() == 5);
  CHECK(family::threshold(4, 2).edges().size() == 6);
  const auto t9 = family::tree_tn(9);
  CHECK(t9.size() == 9);
  CHECK(t9.degree(0) == 4);
  CHECK(t9.edges().size() == 8);
  CHECK(family::petersen().edges().size() == 15);
  CHECK(family::cube_graph(3).edges().size() == 12);
}
