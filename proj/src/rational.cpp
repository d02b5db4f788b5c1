#include "jetsym/rational.hpp"

#include <stdexcept>

namespace jetsym {

std::string to_string(const Rational& value, bool always_fraction) {
  std::string out = value.get_num().get_str();
  if (always_fraction || value.get_den() != 1) {
    out += '/';
    out += value.get_den().get_str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace jetsym
