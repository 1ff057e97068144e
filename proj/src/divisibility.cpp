#include "ffc/divisibility.hpp"

#include "ffc/convolution.hpp"
#include "ffc/error.hpp"
#include "ffc/transforms.hpp"

namespace ffc::divisibility {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

bool is_psd(Matrix m) {
  while (!m.empty()) {
    const std::size_t n = m.size();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][i] < 0) return false;
      if (m[i][i] > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // Zero diagonal: PSD only if the whole block vanishes.
      for (const auto& row : m) {
        for (const auto& x : row) {
          if (x != 0) return false;
        }
      }
      return true;
    }
    Matrix next;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        row.push_back(m[i][j] - m[i][pivot] * m[pivot][j] / m[pivot][pivot]);
      }
      next.push_back(std::move(row));
    }
    m = std::move(next);
  }
  return true;
}

bool distinct_real(const MonicPoly& p) {
  return is_real_rooted(p, /*require_distinct=*/true) == RealRootedness::yes;
}

MonicPoly from_cumulants(int d, std::vector<Rational> kappa) {
  return transforms::coefficients_from_cumulants(CumulantVector{d, std::move(kappa), CumulantVariant::standard});
}

}  // namespace

bool is_conditionally_positive_definite(std::span<const Rational> seq) {
  const std::size_t d = seq.size();
  if (d < 2) fail(ErrorKind::domain, "need at least kappa_1, kappa_2");
  const std::size_t h = d / 2;
  Matrix m(h, std::vector<Rational>(h));
  for (std::size_t i = 1; i <= h; ++i) {
    for (std::size_t j = 1; j <= h; ++j) m[i - 1][j - 1] = seq[i + j - 1];
  }
  return is_psd(std::move(m));
}

IDReport infinite_divisibility_report(const MonicPoly& p) {
  if (is_real_rooted(p) == RealRootedness::no) fail(ErrorKind::domain, "polynomial has non-real roots");
  const int d = p.degree();
  const Rational k1 = transforms::cumulants_from_coefficients(p).kappa.front();
  MonicPoly q = shift(p, k1);
  bool normalized = false;
  if (d >= 2) {
    const Rational k2 = transforms::cumulants_from_coefficients(q).kappa[1];
    if (k2 > 0) {
      if (const auto root = rational_sqrt(k2)) {
        q = dilate(q, *root);
        normalized = true;
      }
    }
  }
  CumulantVector k = transforms::cumulants_from_coefficients(q);
  bool higher_zero = true;
  for (int n = 3; n <= d; ++n) higher_zero = higher_zero && k.kappa[static_cast<std::size_t>(n - 1)] == 0;
  bool cpd = true, cpd_rescaled = true;
  if (d >= 2) {
    cpd = is_conditionally_positive_definite(k.kappa);
    cpd_rescaled = is_conditionally_positive_definite(transforms::rescale_cumulants(k).kappa);
  }
  return IDReport{q, normalized, k.kappa, cpd, cpd_rescaled, higher_zero,
                  higher_zero ? Verdict::infinitely_divisible : Verdict::not_infinitely_divisible};
}

std::optional<Rational> real_rooted_threshold(const MonicPoly& p, const Rational& t_max, int steps) {
  if (p == MonicPoly::monomial(p.degree())) fail(ErrorKind::domain, "threshold undefined for x^d");
  if (t_max <= 0) fail(ErrorKind::domain, "t_max must be positive");
  if (steps < 0) fail(ErrorKind::domain, "steps must be >= 0");
  const auto good = [&](const Rational& t) { return distinct_real(convolution::boxplus_power(p, t)); };

  std::vector<Rational> grid;
  for (Rational t(1, 16); t <= t_max; t *= 2) grid.push_back(t);
  if (grid.empty() || grid.back() != t_max) grid.push_back(t_max);

  std::size_t first = grid.size();
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (!good(grid[i])) break;
    first = i;
  }
  if (first == grid.size()) return std::nullopt;
  if (first == 0) return grid[0];
  Rational lo = grid[first - 1], hi = grid[first];
  for (int s = 0; s < steps; ++s) {
    const Rational mid = (lo + hi) / 2;
    if (good(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

CramerResult cramer_counterexample(int d, const Rational& eps) {
  if (d < 3) fail(ErrorKind::domain, "construction needs d >= 3");
  if (eps <= 0) fail(ErrorKind::domain, "eps must be positive");
  std::vector<Rational> plus(static_cast<std::size_t>(d)), minus(static_cast<std::size_t>(d));
  plus[1] = minus[1] = 1;
  plus[2] = eps;
  minus[2] = -eps;
  const MonicPoly pp = from_cumulants(d, plus), pm = from_cumulants(d, minus);
  const MonicPoly hp = convolution::boxplus_power(pp, Rational(1, 2));
  const MonicPoly hm = convolution::boxplus_power(pm, Rational(1, 2));
  return CramerResult{pp,
                      pm,
                      convolution::boxplus(pp, pm),
                      is_real_rooted(pp) != RealRootedness::no,
                      is_real_rooted(pm) != RealRootedness::no,
                      hp,
                      hm,
                      convolution::boxplus(hp, hm)};
}

const char* to_string(Verdict v) {
  return v == Verdict::infinitely_divisible ? "infinitely_divisible" : "not_infinitely_divisible";
}

}  // namespace ffc::divisibility
