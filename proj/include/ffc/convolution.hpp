#pragma once

#include "ffc/polynomial.hpp"
#include "ffc/rational.hpp"

namespace ffc::convolution {

/// p boxplus_d q by the closed coefficient formula
///   a_k = sum_{i+j=k} (d-i)!(d-j)! / (d!(d-i-j)!) a^p_i a^q_j.
/// Throws Error(dimension) when the degrees differ.
MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q);

/// The polynomial whose finite free cumulants are t * kappa_n(p). t > 0.
MonicPoly boxplus_power(const MonicPoly& p, const Rational& t);

}  // namespace ffc::convolution
