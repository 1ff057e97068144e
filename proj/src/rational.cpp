#include "ffc/rational.hpp"

#include <cctype>

#include "ffc/error.hpp"

namespace ffc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed: return "malformed";
    case ErrorKind::size_limit: return "size_limit";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::domain: return "domain";
    case ErrorKind::index: return "index";
    case ErrorKind::convergence: return "convergence";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    fail(ErrorKind::malformed, "not a rational number: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::malformed, "empty rational literal");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), s);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) fail(ErrorKind::malformed, "zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !is_integer_literal(int_part)) ||
        (!frac_part.empty() && !is_integer_literal(frac_part)) ||
        (!frac_part.empty() && !std::isdigit(static_cast<unsigned char>(frac_part.front())))) {
      fail(ErrorKind::malformed, "not a rational number: '" + std::string(s) + "'");
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(Integer(digits.empty() ? "0" : digits, 10), den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(s, s));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  const std::string_view s = trim(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational falling_factorial(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorKind::domain, "zero raised to a negative power");
    return 1 / pow(base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already in lowest terms
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) || !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  return Rational(num, den);
}

Rational approximate_sqrt(const Rational& value, unsigned long bits) {
  if (value < 0) fail(ErrorKind::domain, "square root of a negative number");
  if (auto exact = rational_sqrt(value)) return *exact;
  mpf_class x(value, bits);
  mpf_class root(0, bits);
  mpf_sqrt(root.get_mpf_t(), x.get_mpf_t());
  return Rational(root);
}

}  // namespace ffc
