#include <doctest.h>

#include <random>

#include "olss/error.hpp"
#include "olss/field.hpp"
#include "oracles.hpp"

using namespace olss;

TEST_CASE("prime field arithmetic") {
  const PrimeField f5(5), f2(2), f7(7);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.reduce(-1) == 6);
  CHECK_THROWS_AS(f7.inv(14), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(std::int64_t{1} << 31), Error);
}

TEST_CASE("inverse is a two-sided inverse in every small field") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 31, 101}) {
    const PrimeField f(p);
    for (std::int64_t a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("field elements refuse mixed moduli") {
  const PrimeField f5(5), f7(7);
  const FieldElement a(f5, 3), b(f5, 4), c(f7, 1);
  CHECK((a + b).value() == 2);
  CHECK((a / b).value() == 2);
  CHECK((-a).value() == 2);
  try {
    (void)(a + c);
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("smallest prime at least m") {
  CHECK(smallest_prime_at_least(2).modulus() == 2);
  CHECK(smallest_prime_at_least(9).modulus() == 11);
  CHECK(smallest_prime_at_least(3 * 10 + 1).modulus() == 31);
  CHECK_THROWS_AS(smallest_prime_at_least(0), Error);
}

TEST_CASE("rank agrees with image counting") {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {2, 3, 5}) {
    const PrimeField field(p);
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % (p == 5 ? 4 : 6);
      FieldMatrix m(rows, cols);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
      }
      CHECK(rank_mod_p(m, field) == oracle::rank_by_counting(m, p));
    }
  }
}

TEST_CASE("row reduction leaves reduced echelon form") {
  const PrimeField f(7);
  FieldMatrix m(3, 3);
  m << 2, 4, 6, 1, 2, 3, 0, 1, 5;
  const int r = row_reduce(m, f);
  CHECK(r == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m.row(2).isZero());
}
