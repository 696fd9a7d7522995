#include <doctest.h>

#include <random>

#include "olss/constructions.hpp"
#include "olss/error.hpp"
#include "olss/scheme.hpp"
#include "oracles.hpp"

using namespace olss;

namespace {

const PrimeField kF2(2);

AffineForm sym(int i) { return AffineForm::symbol(i); }
AffineForm plus(const AffineForm& a, const AffineForm& b) { return add(a, b, kF2); }

// Secret r+t over symbols r=0, t=1, with caller-chosen shares.
LinearScheme two_symbol(std::vector<std::vector<AffineForm>> shares) {
  return LinearScheme(kF2, 2, {plus(sym(0), sym(1))}, std::move(shares));
}

LinearScheme c6_sigma() { return c6_offline(kC6Sigma); }

}  // namespace

TEST_CASE("share entropy of the 6-cycle construction") {
  const auto s = c6_sigma();
  CHECK(share_entropy(s, 0).rank == 0);
  CHECK(share_entropy(s, bit(0)).rank == 3);
  CHECK(share_entropy(s, bit(0)).bits() == doctest::Approx(3.0));
  const auto all = share_entropy(s, full_set(6)).rank;
  // Nine bits under two parity constraints leave seven free dimensions.
  CHECK(all == kC6BaseDim);
  CHECK(all == oracle::rank_by_counting(s.share_matrix(full_set(6)), 2));
}

TEST_CASE("ranks agree with image counting on every subset") {
  const auto s = c6_sigma();
  for (VertexSet a = 0; a < 64; ++a) {
    CHECK(share_entropy(s, a).rank == oracle::rank_by_counting(s.share_matrix(a), 2));
  }
}

TEST_CASE("is_perfect on listed constructions") {
  const auto r = is_perfect(c6_sigma(), family::cycle(6));
  CHECK(r.perfect);
  CHECK(r.complexity == make_rational(3, 2));

  // Vertex 0 keeps no share at all.
  auto shares = c6_sigma().shares();
  shares[0].clear();
  const LinearScheme broken(kF2, kC6BaseDim, c6_sigma().secret(), shares);
  const auto b = is_perfect(broken, family::cycle(6));
  CHECK_FALSE(b.perfect);
  std::set<VertexSet> failures;
  for (const auto& v : b.violations) {
    if (v.kind == ViolationKind::RecoveryFailure) failures.insert(v.subset);
  }
  CHECK(failures == std::set{make_set({0, 1}), make_set({0, 5})});
}

TEST_CASE("complexity values") {
  const LinearScheme single(kF2, 1, {sym(0)}, {{sym(0)}});
  CHECK(complexity(single) == 1);
  CHECK(complexity(c6_sigma()) == make_rational(3, 2));
  const LinearScheme silent(kF2, 1, {AffineForm(FieldRow::Zero(1))}, {{sym(0)}});
  CHECK_THROWS_AS(complexity(silent), Error);
}

TEST_CASE("the three-vertex path sample scheme") {
  // Order a, c, b on a-b-c: a gets r, c gets r, b gets t.
  const auto s = two_symbol({{sym(0)}, {sym(1)}, {sym(0)}});
  const auto r = is_perfect(s, family::path(3));
  CHECK(r.perfect);
  CHECK(r.complexity == 1);
  const auto o = enumeration_oracle(s, family::path(3));
  CHECK(o.perfect);
  CHECK(o.complexity == 1);
  CHECK(o.atoms == 4);
}

TEST_CASE("planted leak is flagged by both checkers") {
  const auto s = two_symbol({{plus(sym(0), sym(1))}, {sym(1)}, {sym(0)}});
  const auto exact = is_perfect(s, family::path(3));
  const auto brute = enumeration_oracle(s, family::path(3));
  CHECK_FALSE(exact.perfect);
  CHECK_FALSE(brute.perfect);
  auto has_leak = [](const SecurityReport& r) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [](const Violation& v) { return v.kind == ViolationKind::Leak; });
  };
  CHECK(has_leak(exact));
  CHECK(has_leak(brute));
}

TEST_CASE("enumeration oracle matches the rank verdict on the 6-cycle") {
  const auto o = enumeration_oracle(c6_sigma(), family::cycle(6));
  CHECK(o.perfect);
  CHECK(o.complexity == make_rational(3, 2));
  CHECK(o.complexity_from_counts == doctest::Approx(1.5));
  CHECK(o.atoms == 128);
  CHECK_THROWS_AS(enumeration_oracle(c6_sigma(), family::cycle(6), 64), Error);
}

TEST_CASE("oracle equivalence on random small schemes") {
  std::mt19937_64 rng(17);
  for (std::int64_t p : {2, 3}) {
    const PrimeField field(p);
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 3 + trial % 2, dim = 3;
      auto random_form = [&] {
        FieldRow row(dim);
        for (int j = 0; j < dim; ++j) row(j) = entry(rng);
        return AffineForm(row, entry(rng));
      };
      std::vector<std::vector<AffineForm>> shares(static_cast<std::size_t>(n));
      for (auto& share : shares) {
        share.push_back(random_form());
        if (trial % 3 == 0) share.push_back(random_form());
      }
      const LinearScheme s(field, dim, {AffineForm::symbol(0)}, shares);
      const auto gamma = oracle::random_sperner(n, rng);
      const auto exact = is_perfect(s, gamma);
      const auto brute = enumeration_oracle(s, gamma);
      CHECK(exact.perfect == brute.perfect);
      CHECK(exact.complexity == brute.complexity);
    }
  }
}

TEST_CASE("perfect schemes with an edge have complexity at least one") {
  for (const auto& s : {c6_sigma(), two_symbol({{sym(0)}, {sym(1)}, {sym(0)}})}) {
    const auto gamma = s.participants() == 6 ? family::cycle(6) : family::path(3);
    const auto r = is_perfect(s, gamma);
    REQUIRE(r.perfect);
    CHECK(r.complexity >= 1);
  }
}

TEST_CASE("entropy profile is the normalized rank function") {
  const auto f = entropy_profile(c6_sigma());
  REQUIRE(f.size() == 64);
  CHECK(f[0] == 0);
  CHECK(f[bit(0)] == make_rational(3, 2));
  CHECK(f[full_set(6)] == make_rational(7, 2));
}

TEST_CASE("maximal unqualified sets of a path") {
  const auto m = maximal_unqualified_sets(family::path(4));
  CHECK(std::set<VertexSet>(m.begin(), m.end()) == std::set{make_set({0, 2}), make_set({0, 3}), make_set({1, 3})});
}

TEST_CASE("participant count must match the structure") {
  try {
    (void)is_perfect(c6_sigma(), family::cycle(5));
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("affine form helpers") {
  const PrimeField f(5);
  FieldRow row(3);
  row << 1, 0, 0;
  const AffineForm a(row, 2);
  CHECK(a.support_length() == 1);
  CHECK(same_form(a, AffineForm(FieldRow::Constant(1, 1), 2)));
  CHECK(a.padded(5).length() == 5);
  CHECK(scale(a, 3, f).constant == 1);
  CHECK(subtract(a, a, f).is_zero());
  CHECK_THROWS_AS(a.padded(0), Error);
}
