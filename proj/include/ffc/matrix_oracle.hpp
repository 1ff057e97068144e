#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "ffc/polynomial.hpp"

namespace ffc::matrix_oracle {

struct MCEstimate {
  int d = 0;
  long samples = 0;
  std::vector<double> coeff_mean;    // a_0..a_d, a_0 = 1 exactly
  std::vector<double> coeff_stderr;
  std::uint64_t seed = 0;
};

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// signs of diag(R) folded into Q.
Eigen::MatrixXd sample_haar_orthogonal(int d, std::mt19937_64& rng);

/// a_0..a_d of det(xI - M) by the Faddeev-LeVerrier recursion. Throws
/// Error(domain) if M is not symmetric to within 1e-10.
std::vector<double> char_poly(const Eigen::MatrixXd& m);

/// Mean of char_poly(A + Q B Q^T) over Haar Q, with A, B the diagonal root
/// matrices of p and q. Samples are split into fixed chunks, each seeded
/// from (seed, chunk index), so the result depends only on the seed.
MCEstimate mc_boxplus(const MonicPoly& p, const MonicPoly& q, long samples, std::uint64_t seed);

inline constexpr long kMinSamples = 1000;
inline constexpr long kChunkSize = 1000;

}  // namespace ffc::matrix_oracle
