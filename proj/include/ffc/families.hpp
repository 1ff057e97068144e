#pragma once

#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"

namespace ffc::families {

/// kappa_2 of the CLT limit: 1 by default, 1 - 1/d in the shrunk normalisation.
enum class HermiteScaling { unit_variance, shrunk };

/// d^{-d/2} H_d(sqrt(d) x): a_{2i} = (d)_{2i} / d^i * (-1)^i / (2^i i!), odd a_i = 0.
MonicPoly hermite_clt(int d, HermiteScaling scaling = HermiteScaling::unit_variance);

/// a_n = (d)_n / (d^n n!) * (d lambda)_n; every finite free cumulant equals
/// lambda. Throws Error(domain) unless d * lambda is a positive integer.
MonicPoly finite_poisson(const Rational& lambda, int d);

struct CltResult {
  MonicPoly poly;
  /// False when sqrt(n) is irrational and was replaced by a 200-bit
  /// rational approximation.
  bool exact;
};

/// p^{boxplus n} dilated so that kappa_r picks up n^{1 - r/2}. Requires
/// kappa_1(p) = 0.
CltResult clt_rescaled_sum(const MonicPoly& p, long n);

}  // namespace ffc::families
