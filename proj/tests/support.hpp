#pragma once

#include <random>
#include <string>
#include <vector>

#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"

namespace testing {

inline ffc::Rational Q(const std::string& s) { return ffc::parse_rational(s); }

inline std::vector<ffc::Rational> Qs(const std::string& csv) { return ffc::parse_rational_list(csv); }

/// Small random rationals p/q with |p| <= 9, 1 <= q <= 6.
inline ffc::Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 6) {
  std::uniform_int_distribution<int> n(-num, num), q(1, den);
  return ffc::make_rational(n(rng), q(rng));
}

inline ffc::MonicPoly random_poly(std::mt19937_64& rng, int d) {
  std::vector<ffc::Rational> a(static_cast<std::size_t>(d) + 1);
  a[0] = 1;
  for (int i = 1; i <= d; ++i) a[static_cast<std::size_t>(i)] = random_rational(rng);
  return ffc::MonicPoly(std::move(a));
}

/// Real-rooted, with distinct rational roots.
inline ffc::MonicPoly random_real_rooted(std::mt19937_64& rng, int d) {
  std::vector<ffc::Rational> roots;
  while (static_cast<int>(roots.size()) < d) {
    const ffc::Rational r = random_rational(rng, 6, 3);
    bool fresh = true;
    for (const auto& x : roots) fresh = fresh && x != r;
    if (fresh) roots.push_back(r);
  }
  return ffc::from_roots(roots);
}

/// Power-sum moments straight from the roots.
inline std::vector<ffc::Rational> root_moments(const std::vector<ffc::Rational>& roots, int count) {
  std::vector<ffc::Rational> m;
  for (int n = 1; n <= count; ++n) {
    ffc::Rational s = 0;
    for (const auto& r : roots) s += ffc::pow(r, n);
    m.push_back(s / static_cast<long>(roots.size()));
  }
  return m;
}

/// kappa_1..kappa_d from the series -(1/d) d/ds log sum_i (-d)^i a_i s^i / (d)_i.
inline std::vector<ffc::Rational> series_cumulants(const ffc::MonicPoly& p) {
  const int d = p.degree();
  const ffc::Rational dq(d);
  std::vector<ffc::Rational> f(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    f[static_cast<std::size_t>(i)] = ffc::pow(-dq, i) * p.a()[static_cast<std::size_t>(i)] /
                                      ffc::falling_factorial(dq, static_cast<unsigned>(i));
  }
  // g = f'/f as a power series, from g f = f'.
  std::vector<ffc::Rational> g(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    ffc::Rational v = f[static_cast<std::size_t>(j + 1)] * (j + 1);
    for (int k = 0; k < j; ++k) v -= g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(j - k)];
    g[static_cast<std::size_t>(j)] = v;
  }
  std::vector<ffc::Rational> kappa;
  for (const auto& x : g) kappa.push_back(-x / dq);
  return kappa;
}

}  // namespace testing
