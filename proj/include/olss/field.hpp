#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <utility>

#include "olss/error.hpp"

namespace olss {

bool is_prime(std::int64_t m);

/// GF(p) for a machine-word prime p (< 2^31).
class PrimeField {
 public:
  /// Throws BadParam if p is not a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }
  /// Throws DivisionByZero for a ≡ 0.
  std::int64_t inv(std::int64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::int64_t p_;
};

PrimeField smallest_prime_at_least(std::int64_t m);

/// Element of a specific prime field; arithmetic across fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const { return field_; }
  std::int64_t value() const { return value_; }

  FieldElement inv() const { return {field_, field_.inv(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  static const PrimeField& same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
    return a.field_;
  }

  PrimeField field_;
  std::int64_t value_;
};

/// Dense matrices over GF(p), entries kept reduced into [0,p).
using FieldMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FieldRow = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

/// In-place Gauss–Jordan elimination over GF(p); returns the rank. Pivot rows
/// end up first, in reduced row echelon form.
int row_reduce(FieldMatrix& m, const PrimeField& field);

/// Rank over GF(p) of any integer-valued Eigen expression (entries need not be reduced).
template <typename Derived>
int rank_mod_p(const Eigen::MatrixBase<Derived>& m, const PrimeField& field) {
  FieldMatrix work = m.template cast<std::int64_t>();
  for (Eigen::Index i = 0; i < work.rows(); ++i) {
    for (Eigen::Index j = 0; j < work.cols(); ++j) work(i, j) = field.reduce(work(i, j));
  }
  return row_reduce(work, field);
}

}  // namespace olss
