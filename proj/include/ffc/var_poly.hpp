#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffc/rational.hpp"

namespace ffc {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. Trailing zeros are always trimmed, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class VarPoly {
 public:
  VarPoly() = default;
  explicit VarPoly(std::vector<Rational> coeffs);

  static VarPoly constant(const Rational& c);
  static VarPoly monomial(const Rational& c, int power);
  /// (t)_k = t (t-1) ... (t-k+1) as a polynomial in t.
  static VarPoly falling_factorial(unsigned k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  VarPoly derivative() const;
  VarPoly monic() const;

  VarPoly& operator+=(const VarPoly& rhs);
  VarPoly& operator-=(const VarPoly& rhs);
  VarPoly& operator*=(const VarPoly& rhs);
  VarPoly& operator*=(const Rational& c);

  friend VarPoly operator+(VarPoly lhs, const VarPoly& rhs) { return lhs += rhs; }
  friend VarPoly operator-(VarPoly lhs, const VarPoly& rhs) { return lhs -= rhs; }
  friend VarPoly operator*(VarPoly lhs, const VarPoly& rhs) { return lhs *= rhs; }
  friend VarPoly operator*(VarPoly lhs, const Rational& c) { return lhs *= c; }
  friend VarPoly operator*(const Rational& c, VarPoly rhs) { return rhs *= c; }
  VarPoly operator-() const;

  friend bool operator==(const VarPoly&, const VarPoly&) = default;

  /// Human-readable form, highest power first, e.g. "t^3 - 3*t^2 + 2*t".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
std::pair<VarPoly, VarPoly> divmod(const VarPoly& num, const VarPoly& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
VarPoly gcd(VarPoly a, VarPoly b);

}  // namespace ffc
