#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olss/access.hpp"
#include "olss/field.hpp"
#include "olss/rational.hpp"

namespace olss {

/// Linear form c·x + constant over the free base symbols x.
///
/// Forms minted before later symbols are shorter than the final base
/// dimension; missing trailing coefficients are zero.
struct AffineForm {
  FieldRow coeffs;
  std::int64_t constant = 0;

  AffineForm() : coeffs(0) {}
  explicit AffineForm(FieldRow c, std::int64_t k = 0) : coeffs(std::move(c)), constant(k) {}

  /// The base symbol with the given index.
  static AffineForm symbol(int index);

  int length() const { return static_cast<int>(coeffs.size()); }
  std::int64_t coeff(int j) const { return j < length() ? coeffs(j) : 0; }
  /// Copy zero-padded to `dim` coefficients.
  AffineForm padded(int dim) const;
  /// Length once trailing zero coefficients are dropped.
  int support_length() const;
  bool is_zero() const;
};

AffineForm add(const AffineForm& a, const AffineForm& b, const PrimeField& field);
AffineForm subtract(const AffineForm& a, const AffineForm& b, const PrimeField& field);
AffineForm scale(const AffineForm& a, std::int64_t factor, const PrimeField& field);
/// Equal as forms (trailing zero coefficients ignored).
bool same_form(const AffineForm& a, const AffineForm& b);

/// Secret and shares as affine forms over `base_dim` free symbols, jointly
/// uniform over GF(p)^base_dim.
class LinearScheme {
 public:
  LinearScheme(PrimeField field, int base_dim, std::vector<AffineForm> secret,
               std::vector<std::vector<AffineForm>> shares);

  const PrimeField& field() const { return field_; }
  int base_dim() const { return base_dim_; }
  int participants() const { return static_cast<int>(shares_.size()); }
  const std::vector<AffineForm>& secret() const { return secret_; }
  const std::vector<std::vector<AffineForm>>& shares() const { return shares_; }
  const std::vector<AffineForm>& share(int participant) const {
    return shares_.at(static_cast<std::size_t>(participant));
  }

  /// Linear parts of the secret forms, one row each.
  FieldMatrix secret_matrix() const;
  /// Linear parts of every form held by the members of `subset`.
  FieldMatrix share_matrix(VertexSet subset) const;

  /// Total field elements held by a participant (share size before rank).
  int element_count(int participant) const { return static_cast<int>(share(participant).size()); }

  friend bool operator==(const LinearScheme& a, const LinearScheme& b);

 private:
  PrimeField field_;
  int base_dim_;
  std::vector<AffineForm> secret_;
  std::vector<std::vector<AffineForm>> shares_;
};

/// H(shares of A) = rank · log2(p) bits.
struct ShareEntropy {
  int rank = 0;
  std::int64_t p = 2;
  double bits() const;
};

ShareEntropy share_entropy(const LinearScheme& scheme, VertexSet subset);
int secret_rank(const LinearScheme& scheme);

/// Max share rank over secret rank. Throws ZeroSecret.
Rational complexity(const LinearScheme& scheme);

enum class ViolationKind { RecoveryFailure, Leak };
std::string_view to_string(ViolationKind kind);

struct Violation {
  VertexSet subset = 0;
  ViolationKind kind = ViolationKind::RecoveryFailure;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SecurityReport {
  bool perfect = false;
  std::vector<Violation> violations;
  Rational complexity;
};

/// Unqualified sets that become qualified when any outside vertex is added.
std::vector<VertexSet> maximal_unqualified_sets(const AccessStructure& gamma);

/// Exact rank-based verdict: recovery checked on edges, independence on the
/// maximal unqualified sets. Throws SizeMismatch, ZeroSecret.
SecurityReport is_perfect(const LinearScheme& scheme, const AccessStructure& gamma);

struct OracleReport : SecurityReport {
  /// Max singleton Shannon entropy over secret entropy, from the counts.
  double complexity_from_counts = 0.0;
  /// Number of participant subsets examined.
  std::size_t subsets_checked = 0;
  std::uint64_t atoms = 0;
};

inline constexpr std::uint64_t kDefaultAtomCap = std::uint64_t{1} << 20;

/// Number of base-symbol assignments, saturated at 2^63.
std::uint64_t atom_count(const LinearScheme& scheme);

/// Brute-force verdict from the exact joint distribution over all p^b
/// assignments of the base symbols. Throws CapExceeded when p^b > atom_cap.
OracleReport enumeration_oracle(const LinearScheme& scheme, const AccessStructure& gamma,
                                std::uint64_t atom_cap = kDefaultAtomCap);

/// f(A) = rank(A) / rank(secret) for every participant subset, indexed by mask.
std::vector<Rational> entropy_profile(const LinearScheme& scheme);

}  // namespace olss
