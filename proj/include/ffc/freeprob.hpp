#pragma once

#include <vector>

#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// Free cumulants r_1..r_N; entries beyond N read as zero.
struct FreeCumulantVector {
  std::vector<Rational> entries;

  friend bool operator==(const FreeCumulantVector&, const FreeCumulantVector&) = default;
};

/// kappa_n^{(d)} for each requested d against the free cumulant r_n.
struct ConvergenceReport {
  int n = 0;
  std::vector<long> d_values;
  std::vector<Rational> finite_kappa;
  Rational free_kappa;
  std::vector<Rational> errors;  // |kappa_n^{(d)} - r_n|
};

namespace freeprob {

/// m_n = sum over NC(n) of r_pi, n = 1..count.
MomentSequence free_moments_from_free_cumulants(const FreeCumulantVector& r, int count);

/// Triangular inversion: r_n = m_n - sum_{pi in NC(n), pi != 1_n} r_pi.
FreeCumulantVector free_cumulants_from_moments(const MomentSequence& m, int count);

/// Moments come from r through NC(n); kappa_n^{(d)} uses only P(n), so
/// the cost does not grow with d. Throws Error(domain) if some d < n.
ConvergenceReport convergence_report(const FreeCumulantVector& r, int n, const std::vector<long>& d_values);

}  // namespace freeprob
}  // namespace ffc
