#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ffc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-0.125" into an exact
/// rational. Throws Error(malformed) on anything else, including a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals; surrounding whitespace is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

/// (x)_k = x (x-1) ... (x-k+1); (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned k);

/// Integer powers, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

/// Nearest rational to sqrt(value) carried with `bits` of mantissa.
Rational approximate_sqrt(const Rational& value, unsigned long bits = 200);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ffc
