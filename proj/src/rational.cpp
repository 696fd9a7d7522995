#include "olss/rational.hpp"

namespace olss {

std::string to_decimal(const Rational& q, int digits) {
  // Round half away from zero at the requested number of digits.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs(q) * scale;
  mpz_class units = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string body = units.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (q < 0 && units != 0 ? "-" : "") + body;
}

}  // namespace olss
