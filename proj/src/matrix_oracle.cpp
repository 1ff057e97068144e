#include "ffc/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ffc/error.hpp"

namespace ffc::matrix_oracle {

namespace {

struct Moments {
  long n = 0;
  std::vector<double> mean, m2;
};

// Chan et al. pairwise update; applied in chunk order for determinism.
void merge(Moments& into, const Moments& part) {
  if (part.n == 0) return;
  if (into.n == 0) {
    into = part;
    return;
  }
  const double n = static_cast<double>(into.n + part.n);
  for (std::size_t i = 0; i < into.mean.size(); ++i) {
    const double delta = part.mean[i] - into.mean[i];
    into.mean[i] += delta * static_cast<double>(part.n) / n;
    into.m2[i] += part.m2[i] + delta * delta * static_cast<double>(into.n) * static_cast<double>(part.n) / n;
  }
  into.n += part.n;
}

Eigen::VectorXd real_roots(const MonicPoly& p) {
  if (is_real_rooted(p) == RealRootedness::no) fail(ErrorKind::domain, "oracle needs real-rooted inputs");
  const auto z = roots(p);
  Eigen::VectorXd out(static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) out[static_cast<Eigen::Index>(i)] = z[i].real();
  return out;
}

Moments run_chunk(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, long count, std::uint64_t seed,
                  std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  const int d = static_cast<int>(a.rows());
  Moments acc;
  acc.mean.assign(static_cast<std::size_t>(d) + 1, 0.0);
  acc.m2.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (long s = 0; s < count; ++s) {
    const Eigen::MatrixXd q = sample_haar_orthogonal(d, rng);
    Eigen::MatrixXd m = a + q * b * q.transpose();
    m = (m + m.transpose()) / 2;
    const auto c = char_poly(m);
    ++acc.n;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double delta = c[i] - acc.mean[i];
      acc.mean[i] += delta / static_cast<double>(acc.n);
      acc.m2[i] += delta * (c[i] - acc.mean[i]);
    }
  }
  return acc;
}

}  // namespace

Eigen::MatrixXd sample_haar_orthogonal(int d, std::mt19937_64& rng) {
  if (d < 1) fail(ErrorKind::domain, "dimension must be >= 1");
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

std::vector<double> char_poly(const Eigen::MatrixXd& m) {
  const int d = static_cast<int>(m.rows());
  if (d < 1 || m.cols() != d) fail(ErrorKind::dimension, "char_poly needs a square matrix");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) fail(ErrorKind::domain, "matrix is not symmetric");
  // det(xI - M) = sum c_k x^k, c_d = 1.
  std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
  c[static_cast<std::size_t>(d)] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(d, d);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  for (int k = 1; k <= d; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(d - k + 1)] * id;
    c[static_cast<std::size_t>(d - k)] = -(m * mk).trace() / k;
  }
  std::vector<double> a(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const double v = c[static_cast<std::size_t>(d - k)];
    a[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
  }
  return a;
}

MCEstimate mc_boxplus(const MonicPoly& p, const MonicPoly& q, long samples, std::uint64_t seed) {
  if (p.degree() != q.degree()) fail(ErrorKind::dimension, "degree mismatch");
  if (samples < kMinSamples) fail(ErrorKind::domain, "need at least 1000 samples");
  const Eigen::MatrixXd a = real_roots(p).asDiagonal();
  const Eigen::MatrixXd b = real_roots(q).asDiagonal();

  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<Moments> parts(static_cast<std::size_t>(chunks));
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(chunks)));
  const auto work = [&](unsigned w) {
    for (long c = w; c < chunks; c += workers) {
      const long count = std::min(kChunkSize, samples - c * kChunkSize);
      parts[static_cast<std::size_t>(c)] = run_chunk(a, b, count, seed, static_cast<std::uint64_t>(c));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Moments total;
  for (const auto& part : parts) merge(total, part);

  MCEstimate out;
  out.d = p.degree();
  out.samples = samples;
  out.seed = seed;
  out.coeff_mean = total.mean;
  out.coeff_mean[0] = 1.0;
  for (std::size_t i = 0; i < total.m2.size(); ++i) {
    const double var = total.m2[i] / static_cast<double>(total.n - 1);
    out.coeff_stderr.push_back(i == 0 ? 0.0 : std::sqrt(std::max(0.0, var) / static_cast<double>(total.n)));
  }
  return out;
}

}  // namespace ffc::matrix_oracle
