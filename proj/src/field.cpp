#include "olss/field.hpp"

#include <string>

namespace olss {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::BadParam, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

PrimeField smallest_prime_at_least(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::BadParam, "smallest_prime_at_least needs m >= 2");
  while (!is_prime(m)) ++m;
  return PrimeField(m);
}

int row_reduce(FieldMatrix& m, const PrimeField& field) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    const std::int64_t inv = field.inv(m(rank, c));
    for (Eigen::Index j = c; j < cols; ++j) m(rank, j) = field.mul(m(rank, j), inv);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const std::int64_t factor = m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(rank, j) != 0) m(r, j) = field.sub(m(r, j), field.mul(factor, m(rank, j)));
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace olss
