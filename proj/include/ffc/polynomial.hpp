#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ffc/rational.hpp"
#include "ffc/var_poly.hpp"

namespace ffc {

/// Monic polynomial of degree d in signed-coefficient form
///   p(x) = sum_{i=0}^{d} (-1)^i a_i x^{d-i},   a_0 = 1,
/// so a_i is the i-th elementary symmetric function of the roots.
class MonicPoly {
 public:
  /// Throws Error(malformed) unless a.size() >= 2 and a[0] == 1.
  explicit MonicPoly(std::vector<Rational> a);

  /// x^d.
  static MonicPoly monomial(int d);

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const std::vector<Rational>& a() const { return a_; }
  /// a_i, with a_i = 0 for i > d.
  Rational coefficient(int i) const;

  /// Ordinary coefficients in ascending powers of x.
  VarPoly to_plain() const;

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  std::vector<Rational> a_;
};

/// m_1..m_N; `degree` records the d of the source polynomial, when known.
struct MomentSequence {
  std::vector<Rational> m;
  std::optional<int> degree;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Ordinary coefficients, highest power first; the leading one must be 1.
MonicPoly from_plain_coefficients(std::span<const Rational> descending);

MonicPoly from_roots(std::span<const Rational> roots);

/// lambda^{-d} p(lambda x); the lambda = 0 case is x^d.
MonicPoly dilate(const MonicPoly& p, const Rational& lambda);

/// p(x + c), renormalised (it stays monic).
MonicPoly shift(const MonicPoly& p, const Rational& c);

/// Normalised power sums m_n = (1/d) sum r_i^n, n = 1..count, from the
/// Newton identities in exact arithmetic (a_k = 0 beyond d).
MomentSequence moments(const MonicPoly& p, int count);

Rational evaluate(const MonicPoly& p, const Rational& x);
double evaluate(const MonicPoly& p, double x);
std::complex<double> evaluate(const MonicPoly& p, std::complex<double> x);

/// All d roots with multiplicity, sorted by (real, imag). Throws
/// Error(convergence) when a root's residual exceeds tol * scale.
std::vector<std::complex<double>> roots(const MonicPoly& p, double tol = 1e-12);

enum class RealRootedness { yes, no, boundary };

/// Exact test: counts real roots with multiplicity from a square-free
/// factorisation and Sturm sequences. With require_distinct, a polynomial
/// whose roots are all real but repeated is reported as `boundary`.
RealRootedness is_real_rooted(const MonicPoly& p, bool require_distinct = false);

/// Number of distinct real roots of a nonzero polynomial (Sturm).
int count_distinct_real_roots(const VarPoly& f);

/// Yun's algorithm: f = c * prod g_i^i with each g_i monic and square-free.
/// Returns the nonconstant (g_i, i) pairs.
std::vector<std::pair<VarPoly, int>> square_free_factorization(const VarPoly& f);

}  // namespace ffc
