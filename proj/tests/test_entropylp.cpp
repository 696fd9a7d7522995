#include <doctest.h>

#include <random>

#include "olss/constructions.hpp"
#include "olss/entropylp.hpp"
#include "olss/error.hpp"
#include "oracles.hpp"

using namespace olss;

namespace {

Rational kappa(const AccessStructure& g) { return solve(build_lp(g)).kappa; }

}  // namespace

TEST_CASE("golden LP optima") {
  CHECK(kappa(family::path(2)) == 1);
  CHECK(kappa(family::path(3)) == 1);
  CHECK(kappa(family::path(4)) == make_rational(3, 2));
  CHECK(kappa(family::path(5)) == make_rational(3, 2));
  CHECK(kappa(family::cycle(5)) == make_rational(3, 2));
  CHECK(kappa(family::edgeless(3)) == 0);
}

TEST_CASE("witnesses satisfy every rule") {
  for (const auto& g : {family::path(4), family::cycle(5), family::star_plus_isolated(2, 1)}) {
    const auto r = solve(build_lp(g));
    CHECK(check_entropy_function(r.witness, g).empty());
    Rational top = 0;
    for (int v = 0; v < g.size(); ++v) top = std::max(top, r.witness[bit(v)]);
    CHECK(top == r.kappa);
  }
}

TEST_CASE("planted defects are reported") {
  const auto witness = solve(build_lp(family::path(3))).witness;
  auto has_rule = [](const std::vector<EntropyViolation>& v, char rule) {
    return std::any_of(v.begin(), v.end(), [rule](const EntropyViolation& e) { return e.rule == rule; });
  };

  // An endpoint with no entropy breaks f(0) + f(1) >= f(01) once f(01) >= f(1) + 1.
  auto f = witness;
  f[bit(0)] = 0;
  CHECK(has_rule(check_entropy_function(f, family::path(3)), 'c'));

  auto g = witness;
  g[make_set({0, 1})] = g[bit(1)];
  CHECK(has_rule(check_entropy_function(g, family::path(3)), 'd'));
}

TEST_CASE("6-cycle scheme profile is an entropy function") {
  CHECK(check_entropy_function(entropy_profile(c6_offline(kC6Sigma)), family::cycle(6)).empty());
}

TEST_CASE("symmetrization") {
  const auto p6 = family::path(6);
  const auto sym = solve(add_symmetry(build_lp(p6), induced(p6, make_set({0, 1, 3, 4}))));
  CHECK(sym.kappa == make_rational(7, 4));
  CHECK(check_entropy_function(sym.witness, p6).empty());

  const auto p4 = family::path(4);
  const auto single = solve(add_symmetry(build_lp(p4), induced(p4, bit(2))));
  CHECK(single.kappa == kappa(p4));

  const auto star = family::star_plus_isolated(2, 3);
  const auto plain = solve(build_lp(star)).kappa;
  const auto leaves = solve(add_symmetry(build_lp(star), induced(star, full_set(6) & ~bit(0)))).kappa;
  CHECK(leaves >= plain);
  CHECK(leaves >= make_rational(12, 7));

  CHECK_THROWS_AS(add_symmetry(build_lp(p4), induced(family::path(5), bit(4))), Error);
}

TEST_CASE("aliasing by the full automorphism group keeps the optimum") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = oracle::random_sperner(5, rng);
    CHECK(solve(add_symmetry(build_lp(g), induced(g, full_set(5)))).kappa == kappa(g));
  }
  const auto c6 = family::cycle(6);
  CHECK(solve(add_symmetry(build_lp(c6), induced(c6, full_set(6)))).kappa == kappa(c6));
}

TEST_CASE("substructure monotonicity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = oracle::random_sperner(5, rng);
    const auto whole = kappa(g);
    for (VertexSet s : {VertexSet{0b01111}, VertexSet{0b10110}, VertexSet{0b00111}}) {
      CHECK(kappa(induced(g, s).relabeled()) <= whole);
    }
  }
}

TEST_CASE("soundness against constructed schemes") {
  const auto c5 = family::cycle(5);
  CHECK(kappa(c5) <= complexity(stinson_star_cover(c5, neighborhood_star_cover(c5))));
  const auto t = family::threshold(4, 3);
  CHECK(kappa(t) <= complexity(generalized_star_cover(t, canonical_star_system(t))));
}

TEST_CASE("caps and exports") {
  CHECK_THROWS_AS(build_lp(family::path(11)), Error);
  CHECK_THROWS_AS(build_lp(family::path(8)), Error);
  const auto dropped = build_lp(family::path(8), true);
  CHECK(dropped.rule_e_dropped);

  const auto text = export_lp(build_lp(family::path(3)));
  CHECK(text.find("f[0,1]") != std::string::npos);
  CHECK(text.find(">= 1") != std::string::npos);
  CHECK(subset_label(make_set({0, 2})) == "[0,2]");
}
