#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetsym {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" form; integers print without a denominator unless
/// `always_fraction` is set.
std::string to_string(const Rational& value, bool always_fraction = false);

/// Accepts "n", "-n" and "n/d". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
Rational ratio(long n, long d);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace jetsym
