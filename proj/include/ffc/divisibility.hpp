#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"

namespace ffc::divisibility {

/// Whether the Hankel matrix M_ij = kappa_{i+j}, 1 <= i,j <= floor(d/2),
/// is positive semidefinite. seq holds kappa_1..kappa_d, d >= 2. Decided
/// by exact symmetric elimination.
bool is_conditionally_positive_definite(std::span<const Rational> seq);

enum class Verdict { infinitely_divisible, not_infinitely_divisible };

struct IDReport {
  /// Centred; also dilated to kappa_2 = 1 when sqrt(kappa_2) is rational.
  MonicPoly centered_normalized;
  bool normalized;
  std::vector<Rational> kappa;  // cumulants of centered_normalized
  bool cpd_standard;
  bool cpd_rescaled;
  bool higher_cumulants_zero;
  Verdict verdict;
};

/// Throws Error(domain) for input with non-real roots.
IDReport infinite_divisibility_report(const MonicPoly& p);

/// Scans t = 1/16, 1/8, ... up to t_max for real-rootedness of p^{boxplus t}
/// with d distinct roots, then bisects `steps` times between the last
/// failing and the first passing grid point. Returns the smallest t found
/// after which every sampled t passes, or nothing if t_max does not pass.
std::optional<Rational> real_rooted_threshold(const MonicPoly& p, const Rational& t_max, int steps = 8);

struct CramerResult {
  MonicPoly p_plus;   // kappa = (0, 1, +eps, 0, ...)
  MonicPoly p_minus;  // kappa = (0, 1, -eps, 0, ...)
  MonicPoly convolution;  // p_plus boxplus p_minus, kappa = (0, 2, 0, ...)
  bool plus_real_rooted;
  bool minus_real_rooted;
  MonicPoly half_plus;   // p_plus^{boxplus 1/2}
  MonicPoly half_minus;  // p_minus^{boxplus 1/2}
  MonicPoly half_convolution;  // equals hermite_clt(d)
};

CramerResult cramer_counterexample(int d, const Rational& eps);

const char* to_string(Verdict v);

}  // namespace ffc::divisibility
