#pragma once

#include <span>
#include <vector>

#include "ffc/partitions.hpp"
#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"
#include "ffc/var_poly.hpp"

namespace ffc {

enum class CumulantVariant { standard, rescaled };

/// Finite free cumulants kappa_1..kappa_d of a degree-d polynomial. The
/// rescaled variant stores (d)_n / d^n * kappa_n, whose leading moment term
/// is m_n itself.
struct CumulantVector {
  int d = 0;
  std::vector<Rational> kappa;
  CumulantVariant variant = CumulantVariant::standard;

  friend bool operator==(const CumulantVector&, const CumulantVector&) = default;
};

namespace transforms {

// Every transform below is a sum over the partition lattices P(n), n <= d
// (or n <= N), and therefore inherits partitions::max_size() as a cap.

CumulantVector cumulants_from_coefficients(const MonicPoly& p);
MonicPoly coefficients_from_cumulants(const CumulantVector& k);

MonicPoly coefficients_from_moments(const MomentSequence& m, int d);
/// Lattice formula for N <= n_max; beyond the cap it delegates to the
/// Newton identities, which agree wherever both apply.
MomentSequence moments_from_coefficients(const MonicPoly& p, int count);

CumulantVector cumulants_from_moments(const MomentSequence& m, int d);
/// kappa_j for j > d is taken to be zero when a block exceeds d.
MomentSequence moments_from_cumulants(const CumulantVector& k, int count);

/// Single-order versions of the two moment-cumulant formulas, with the
/// degree allowed to be any rational for which no (d)_pi vanishes. Only
/// P(n) is summed, so d itself may be large.
Rational cumulant_from_moments_at(std::span<const Rational> moments, const Rational& d, int n);
Rational moment_from_cumulants_at(std::span<const Rational> kappa, const Rational& d, int n);

/// Toggles between the standard and rescaled variants.
CumulantVector rescale_cumulants(const CumulantVector& k);

/// sum_{j<d} kappa_{j+1} s^j.
VarPoly truncated_r_transform(const MonicPoly& p);

/// P_sigma(d) = sum_{pi >= sigma} (-1)^{|pi|} (d)_pi (|pi|-1)!, built by
/// filtering P(n).
VarPoly p_sigma(const partitions::SetPartition& sigma);

/// sum over rho with rho v sigma = 1_n of mu(0, rho) d^{|rho|}.
VarPoly p_sigma_join_form(const partitions::SetPartition& sigma);

/// Established by exhaustive comparison: p_sigma_join_form = kJoinFormSign * p_sigma.
inline constexpr int kJoinFormSign = -1;

/// (n+1-|sigma|)! / ((-1)^{|sigma|} (n-1)! n_sigma) * P_sigma(d); monic of
/// degree n+1-|sigma|.
VarPoly q_sigma(const partitions::SetPartition& sigma);

}  // namespace transforms
}  // namespace ffc
