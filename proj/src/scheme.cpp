#include "olss/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "olss/error.hpp"

namespace olss {

// ---------------------------------------------------------------------------
// AffineForm

AffineForm AffineForm::symbol(int index) {
  FieldRow c = FieldRow::Zero(index + 1);
  c(index) = 1;
  return AffineForm(std::move(c));
}

AffineForm AffineForm::padded(int dim) const {
  if (support_length() > dim) throw Error(ErrorCode::BadParam, "form is longer than the base dimension");
  FieldRow c = FieldRow::Zero(dim);
  const int keep = std::min(dim, length());
  c.head(keep) = coeffs.head(keep);
  return AffineForm(std::move(c), constant);
}

int AffineForm::support_length() const {
  int len = length();
  while (len > 0 && coeffs(len - 1) == 0) --len;
  return len;
}

bool AffineForm::is_zero() const { return support_length() == 0 && constant == 0; }

AffineForm add(const AffineForm& a, const AffineForm& b, const PrimeField& field) {
  const int dim = std::max(a.length(), b.length());
  FieldRow c(dim);
  for (int j = 0; j < dim; ++j) c(j) = field.add(a.coeff(j), b.coeff(j));
  return AffineForm(std::move(c), field.add(a.constant, b.constant));
}

AffineForm subtract(const AffineForm& a, const AffineForm& b, const PrimeField& field) {
  return add(a, scale(b, -1, field), field);
}

AffineForm scale(const AffineForm& a, std::int64_t factor, const PrimeField& field) {
  FieldRow c(a.length());
  for (int j = 0; j < a.length(); ++j) c(j) = field.mul(a.coeffs(j), factor);
  return AffineForm(std::move(c), field.mul(a.constant, factor));
}

bool same_form(const AffineForm& a, const AffineForm& b) {
  const int len = a.support_length();
  if (len != b.support_length() || a.constant != b.constant) return false;
  for (int j = 0; j < len; ++j) {
    if (a.coeffs(j) != b.coeffs(j)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LinearScheme

LinearScheme::LinearScheme(PrimeField field, int base_dim, std::vector<AffineForm> secret,
                           std::vector<std::vector<AffineForm>> shares)
    : field_(field), base_dim_(base_dim), secret_(std::move(secret)), shares_(std::move(shares)) {
  if (base_dim_ < 0) throw Error(ErrorCode::BadParam, "negative base dimension");
  if (static_cast<int>(shares_.size()) > kMaxVertices) throw Error(ErrorCode::BadParam, "too many participants");
  auto normalize = [&](AffineForm& f) {
    f = f.padded(base_dim_);
    for (int j = 0; j < base_dim_; ++j) f.coeffs(j) = field_.reduce(f.coeffs(j));
    f.constant = field_.reduce(f.constant);
  };
  for (auto& f : secret_) normalize(f);
  for (auto& share : shares_) {
    for (auto& f : share) normalize(f);
  }
}

FieldMatrix LinearScheme::secret_matrix() const {
  FieldMatrix m(static_cast<Eigen::Index>(secret_.size()), base_dim_);
  for (std::size_t i = 0; i < secret_.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = secret_[i].coeffs;
  return m;
}

FieldMatrix LinearScheme::share_matrix(VertexSet subset) const {
  Eigen::Index rows = 0;
  for (int v : members(subset)) rows += static_cast<Eigen::Index>(share(v).size());
  FieldMatrix m(rows, base_dim_);
  Eigen::Index r = 0;
  for (int v : members(subset)) {
    for (const auto& f : share(v)) m.row(r++) = f.coeffs;
  }
  return m;
}

bool operator==(const LinearScheme& a, const LinearScheme& b) {
  auto same_list = [](const std::vector<AffineForm>& x, const std::vector<AffineForm>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].coeffs != y[i].coeffs || x[i].constant != y[i].constant) return false;
    }
    return true;
  };
  if (!(a.field_ == b.field_) || a.base_dim_ != b.base_dim_ || !same_list(a.secret_, b.secret_) ||
      a.shares_.size() != b.shares_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.shares_.size(); ++i) {
    if (!same_list(a.shares_[i], b.shares_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rank-based measurements

double ShareEntropy::bits() const { return rank * std::log2(static_cast<double>(p)); }

ShareEntropy share_entropy(const LinearScheme& scheme, VertexSet subset) {
  if (!is_subset(subset, full_set(scheme.participants()))) {
    throw Error(ErrorCode::BadParam, "subset outside the participant set");
  }
  return {rank_mod_p(scheme.share_matrix(subset), scheme.field()), scheme.field().modulus()};
}

int secret_rank(const LinearScheme& scheme) { return rank_mod_p(scheme.secret_matrix(), scheme.field()); }

Rational complexity(const LinearScheme& scheme) {
  const int rs = secret_rank(scheme);
  if (rs == 0) throw Error(ErrorCode::ZeroSecret, "the secret carries no entropy");
  int worst = 0;
  for (int v = 0; v < scheme.participants(); ++v) {
    worst = std::max(worst, share_entropy(scheme, bit(v)).rank);
  }
  return make_rational(worst, rs);
}

std::string_view to_string(ViolationKind kind) {
  return kind == ViolationKind::RecoveryFailure ? "RecoveryFailure" : "Leak";
}

std::vector<VertexSet> maximal_unqualified_sets(const AccessStructure& gamma) {
  const int n = gamma.size();
  if (n > 24) throw Error(ErrorCode::CapExceeded, "maximal unqualified sets enumerated only for n <= 24");
  std::vector<VertexSet> out;
  const VertexSet all = full_set(n);
  for (VertexSet a = 0; a <= all; ++a) {
    if (gamma.is_qualified(a)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!contains(a, v) && !gamma.is_qualified(a | bit(v))) maximal = false;
    }
    if (maximal) out.push_back(a);
    if (a == all) break;
  }
  return out;
}

namespace {

FieldMatrix stack(const FieldMatrix& top, const FieldMatrix& bottom) {
  FieldMatrix m(top.rows() + bottom.rows(), top.cols());
  m << top, bottom;
  return m;
}

}  // namespace

SecurityReport is_perfect(const LinearScheme& scheme, const AccessStructure& gamma) {
  if (scheme.participants() != gamma.size()) {
    throw Error(ErrorCode::SizeMismatch, "scheme has " + std::to_string(scheme.participants()) +
                                             " participants, structure has " + std::to_string(gamma.size()));
  }
  const PrimeField& field = scheme.field();
  const FieldMatrix secret = scheme.secret_matrix();
  const int rs = rank_mod_p(secret, field);
  if (rs == 0) throw Error(ErrorCode::ZeroSecret, "the secret carries no entropy");

  SecurityReport report;
  for (VertexSet e : gamma.edges()) {
    const FieldMatrix held = scheme.share_matrix(e);
    if (rank_mod_p(stack(held, secret), field) != rank_mod_p(held, field)) {
      report.violations.push_back({e, ViolationKind::RecoveryFailure});
    }
  }
  for (VertexSet a : maximal_unqualified_sets(gamma)) {
    const FieldMatrix held = scheme.share_matrix(a);
    if (rank_mod_p(stack(held, secret), field) != rank_mod_p(held, field) + rs) {
      report.violations.push_back({a, ViolationKind::Leak});
    }
  }
  report.perfect = report.violations.empty();
  report.complexity = complexity(scheme);
  return report;
}

std::vector<Rational> entropy_profile(const LinearScheme& scheme) {
  const int n = scheme.participants();
  if (n > 20) throw Error(ErrorCode::CapExceeded, "entropy profile limited to 20 participants");
  const int rs = secret_rank(scheme);
  if (rs == 0) throw Error(ErrorCode::ZeroSecret, "the secret carries no entropy");
  std::vector<Rational> f(std::size_t{1} << n);
  for (VertexSet a = 0; a < (VertexSet{1} << n); ++a) {
    f[a] = make_rational(share_entropy(scheme, a).rank, rs);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration oracle

std::uint64_t atom_count(const LinearScheme& scheme) {
  const auto p = static_cast<std::uint64_t>(scheme.field().modulus());
  std::uint64_t atoms = 1;
  for (int j = 0; j < scheme.base_dim(); ++j) {
    if (atoms > (std::uint64_t{1} << 63) / p) return std::uint64_t{1} << 63;
    atoms *= p;
  }
  return atoms;
}

namespace {

using Key = unsigned __int128;

// Distribution of (observation, secret) pairs over all atoms. Observations
// are packed exactly into 128 bits, or interned through an ordered map when
// they would not fit.
class JointTable {
 public:
  JointTable(std::vector<Key> obs, const std::vector<std::uint64_t>& secret) {
    rows_.reserve(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) rows_.emplace_back(obs[i], secret[i]);
    std::sort(rows_.begin(), rows_.end());
  }

  // Every observation value pins down a single secret value.
  bool determines_secret() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      if (rows_[i].first == rows_[i - 1].first && rows_[i].second != rows_[i - 1].second) return false;
    }
    return true;
  }

  // P(o, s) = P(o) P(s) for every o in the support and every s.
  bool independent_of_secret(const std::map<std::uint64_t, std::uint64_t>& secret_counts) const {
    const auto total = static_cast<std::uint64_t>(rows_.size());
    std::size_t i = 0;
    while (i < rows_.size()) {
      std::size_t j = i;
      while (j < rows_.size() && rows_[j].first == rows_[i].first) ++j;
      const std::uint64_t count_o = j - i;
      std::size_t distinct = 0;
      std::size_t k = i;
      while (k < j) {
        std::size_t l = k;
        while (l < j && rows_[l].second == rows_[k].second) ++l;
        const std::uint64_t count_os = l - k;
        const std::uint64_t count_s = secret_counts.at(rows_[k].second);
        if (static_cast<Key>(count_os) * total != static_cast<Key>(count_o) * count_s) return false;
        ++distinct;
        k = l;
      }
      if (distinct != secret_counts.size()) return false;
      i = j;
    }
    return true;
  }

 private:
  std::vector<std::pair<Key, std::uint64_t>> rows_;
};

double shannon_bits(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  double h = 0.0;
  for (std::uint64_t c : counts) {
    const double q = static_cast<double>(c) / static_cast<double>(total);
    h -= q * std::log2(q);
  }
  return h;
}

// Exponent r with p^r == support, given the distribution is uniform.
int uniform_exponent(const std::vector<std::uint64_t>& counts, std::uint64_t total, std::uint64_t p) {
  for (std::uint64_t c : counts) {
    if (c != counts.front()) throw Error(ErrorCode::BadParam, "oracle: non-uniform share distribution");
  }
  std::uint64_t support = counts.size();
  if (support * counts.front() != total) throw Error(ErrorCode::BadParam, "oracle: inconsistent counts");
  int r = 0;
  while (support > 1) {
    if (support % p != 0) throw Error(ErrorCode::BadParam, "oracle: support is not a power of p");
    support /= p;
    ++r;
  }
  return r;
}

std::vector<std::uint64_t> histogram(std::vector<Key> values) {
  std::sort(values.begin(), values.end());
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    counts.push_back(j - i);
    i = j;
  }
  return counts;
}

}  // namespace

OracleReport enumeration_oracle(const LinearScheme& scheme, const AccessStructure& gamma,
                                std::uint64_t atom_cap) {
  if (scheme.participants() != gamma.size()) throw Error(ErrorCode::SizeMismatch, "participant count mismatch");
  const std::uint64_t atoms = atom_count(scheme);
  if (atoms > atom_cap) {
    throw Error(ErrorCode::CapExceeded,
                "p^b = " + std::to_string(atoms) + " exceeds the atom cap " + std::to_string(atom_cap));
  }
  const int n = scheme.participants();
  const int b = scheme.base_dim();
  const std::int64_t p = scheme.field().modulus();
  const PrimeField& field = scheme.field();

  // Flatten every form: participants' forms first, then the secret forms.
  std::vector<const AffineForm*> forms;
  std::vector<std::pair<std::size_t, std::size_t>> range(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    range[static_cast<std::size_t>(v)].first = forms.size();
    for (const auto& f : scheme.share(v)) forms.push_back(&f);
    range[static_cast<std::size_t>(v)].second = forms.size();
  }
  const std::size_t secret_begin = forms.size();
  for (const auto& f : scheme.secret()) forms.push_back(&f);

  // Walk all atoms with an odometer, updating form values incrementally.
  const std::size_t nf = forms.size();
  std::vector<std::int64_t> value(nf);
  for (std::size_t i = 0; i < nf; ++i) value[i] = forms[i]->constant;
  std::vector<std::int64_t> digit(static_cast<std::size_t>(b), 0);
  std::vector<std::int64_t> table(static_cast<std::size_t>(atoms) * nf);
  for (std::uint64_t atom = 0; atom < atoms; ++atom) {
    std::copy(value.begin(), value.end(), table.begin() + static_cast<std::ptrdiff_t>(atom * nf));
    for (int j = 0; j < b; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const std::int64_t delta = digit[uj] + 1 < p ? 1 : -(p - 1);
      digit[uj] = digit[uj] + 1 < p ? digit[uj] + 1 : 0;
      for (std::size_t i = 0; i < nf; ++i) {
        value[i] = field.add(value[i], field.mul(forms[i]->coeffs(j), delta));
      }
      if (delta == 1) break;
    }
  }

  // Observation of a set of forms, packed exactly when it fits in 128 bits.
  int bits_per_value = 0;
  while ((std::int64_t{1} << bits_per_value) < p) ++bits_per_value;
  std::map<std::vector<std::int64_t>, Key> intern;
  auto observe = [&](const std::vector<std::size_t>& which, std::uint64_t atom) -> Key {
    const std::int64_t* row = table.data() + atom * nf;
    if (which.size() * static_cast<std::size_t>(bits_per_value) <= 127) {
      Key k = 0;
      for (std::size_t i : which) k = (k << bits_per_value) | static_cast<Key>(row[i]);
      return k;
    }
    std::vector<std::int64_t> v;
    v.reserve(which.size());
    for (std::size_t i : which) v.push_back(row[i]);
    auto [it, inserted] = intern.emplace(std::move(v), static_cast<Key>(intern.size()));
    return it->second;
  };
  auto forms_of = [&](VertexSet set) {
    std::vector<std::size_t> which;
    for (int v : members(set)) {
      for (std::size_t i = range[static_cast<std::size_t>(v)].first; i < range[static_cast<std::size_t>(v)].second; ++i) {
        which.push_back(i);
      }
    }
    return which;
  };

  std::vector<std::size_t> secret_forms;
  for (std::size_t i = secret_begin; i < nf; ++i) secret_forms.push_back(i);
  if (secret_forms.size() * static_cast<std::size_t>(bits_per_value) > 64) {
    throw Error(ErrorCode::CapExceeded, "oracle: secret does not pack into 64 bits");
  }
  std::vector<std::uint64_t> secret_value(static_cast<std::size_t>(atoms));
  std::vector<Key> secret_keys(static_cast<std::size_t>(atoms));
  for (std::uint64_t a = 0; a < atoms; ++a) {
    secret_keys[a] = observe(secret_forms, a);
    secret_value[a] = static_cast<std::uint64_t>(secret_keys[a]);
  }
  intern.clear();
  const auto secret_hist = histogram(secret_keys);
  std::map<std::uint64_t, std::uint64_t> secret_counts;
  for (std::uint64_t a = 0; a < atoms; ++a) ++secret_counts[secret_value[a]];

  OracleReport report;
  report.atoms = atoms;
  const int rs = uniform_exponent(secret_hist, atoms, static_cast<std::uint64_t>(p));
  const double hs = shannon_bits(secret_hist, atoms);
  if (rs == 0) throw Error(ErrorCode::ZeroSecret, "the secret carries no entropy");

  // Every subset when affordable; otherwise the minimal witness family
  // (edges for recovery, maximal unqualified sets for independence).
  std::vector<VertexSet> subsets;
  if (n <= 16 && (atoms << n) <= (std::uint64_t{1} << 20)) {
    for (VertexSet a = 0; a < (VertexSet{1} << n); ++a) subsets.push_back(a);
  } else {
    subsets = gamma.edges();
    auto maximal = maximal_unqualified_sets(gamma);
    subsets.insert(subsets.end(), maximal.begin(), maximal.end());
  }
  for (VertexSet a : subsets) {
    const auto which = forms_of(a);
    std::vector<Key> obs(static_cast<std::size_t>(atoms));
    for (std::uint64_t at = 0; at < atoms; ++at) obs[at] = observe(which, at);
    intern.clear();
    JointTable joint(std::move(obs), secret_value);
    if (gamma.is_qualified(a)) {
      if (!joint.determines_secret()) report.violations.push_back({a, ViolationKind::RecoveryFailure});
    } else if (!joint.independent_of_secret(secret_counts)) {
      report.violations.push_back({a, ViolationKind::Leak});
    }
    ++report.subsets_checked;
  }

  int worst = 0;
  double worst_bits = 0.0;
  for (int v = 0; v < n; ++v) {
    const auto which = forms_of(bit(v));
    std::vector<Key> obs(static_cast<std::size_t>(atoms));
    for (std::uint64_t at = 0; at < atoms; ++at) obs[at] = observe(which, at);
    intern.clear();
    const auto hist = histogram(std::move(obs));
    worst = std::max(worst, uniform_exponent(hist, atoms, static_cast<std::uint64_t>(p)));
    worst_bits = std::max(worst_bits, shannon_bits(hist, atoms));
  }
  report.perfect = report.violations.empty();
  report.complexity = make_rational(worst, rs);
  report.complexity_from_counts = worst_bits / hs;
  return report;
}

}  // namespace olss
