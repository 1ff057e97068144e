#include "ffc/var_poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffc/error.hpp"

namespace ffc {

VarPoly::VarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

VarPoly VarPoly::constant(const Rational& c) { return VarPoly({c}); }

VarPoly VarPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return VarPoly(std::move(v));
}

VarPoly VarPoly::falling_factorial(unsigned k) {
  VarPoly r = constant(1);
  for (unsigned i = 0; i < k; ++i) r *= VarPoly({Rational(-static_cast<long>(i)), Rational(1)});
  return r;
}

void VarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational VarPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational VarPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational VarPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double VarPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

VarPoly VarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return VarPoly(std::move(v));
}

VarPoly VarPoly::monic() const {
  if (is_zero()) return {};
  VarPoly r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

VarPoly& VarPoly::operator+=(const VarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

VarPoly& VarPoly::operator-=(const VarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

VarPoly& VarPoly::operator*=(const VarPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

VarPoly& VarPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

VarPoly VarPoly::operator-() const {
  VarPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string VarPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0) {
      os << ffc::to_string(mag);
      continue;
    }
    if (!unit) os << ffc::to_string(mag) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<VarPoly, VarPoly> divmod(const VarPoly& num, const VarPoly& den) {
  if (den.is_zero()) fail(ErrorKind::domain, "polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {VarPoly{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd) + 1);
  const Rational lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {VarPoly(std::move(quot)), VarPoly(std::move(rem))};
}

VarPoly gcd(VarPoly a, VarPoly b) {
  while (!b.is_zero()) {
    VarPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace ffc
