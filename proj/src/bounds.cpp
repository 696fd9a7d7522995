#include "olss/bounds.hpp"

#include <cmath>
#include <string>

#include "olss/error.hpp"

namespace olss::bounds {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParam, what);
}

Rational power(long base, long exponent) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(p);
  Rational q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

}  // namespace

Rational stinson(int d) {
  require(d >= 1, "stinson bound needs d >= 1");
  return make_rational(d + 1, 2);
}

Rational ff(const AccessStructure& gamma) { return Rational(max_degree(gamma)); }

Rational tightened_offline(int d, int n) {
  require(d >= 1 && n >= 1, "tightened bound needs d, n >= 1");
  return Rational(d) - make_rational(d - 1, n);
}

Rational star_lower(int d, int m) {
  require(d >= 1 && m >= 0, "star bound needs d >= 1 and m >= 0");
  const long dl = d;
  return Rational(d) - make_rational(dl * dl * dl - dl * dl, 2 * m + 2 + dl * dl + dl);
}

Rational path_lower(int n) {
  require(n >= 1, "path bound needs n >= 1");
  return Rational(2) - make_rational(4, n);
}

Rational cycle_upper(int n) {
  require(n >= 1, "cycle bound needs n >= 1");
  return Rational(2) - make_rational(1, 4L * n);
}

Rational graph_online_upper(int d, int n) {
  require(d >= 1 && n >= 1, "graph bound needs d, n >= 1");
  return Rational(d) - make_rational(1, 2L * d * n);
}

Rational thm15_m(int n, int r) {
  require(n >= 1 && r >= 2, "M needs n >= 1 and r >= 2");
  const Rational a = Rational(r) * power(n, 2L * r - 3);
  const Rational b = power(3, n - 1L);
  return a < b ? a : b;
}

Rational thm15_upper(int n, int d, int r) {
  require(n >= 1 && d >= 1 && r >= 2, "hypergraph bound needs n, d >= 1 and r >= 2");
  const Rational denom = Rational(n) * d * thm15_m(n, r) + Rational(n) * d * d + n;
  Rational q = Rational(d) - 1 / denom;
  q.canonicalize();
  return q;
}

Rational tree_online_lower(int n) {
  require(n >= 1, "tree bound needs n >= 1");
  int root = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return make_rational(root, 2);
}

double perf_ratio_lower(int n) {
  require(n >= 1, "ratio bound needs n >= 1");
  return std::sqrt(static_cast<double>(n)) / 3.0;
}

}  // namespace olss::bounds
