#include "ffc/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffc/error.hpp"

namespace ffc {

MonicPoly::MonicPoly(std::vector<Rational> a) : a_(std::move(a)) {
  if (a_.size() < 2) fail(ErrorKind::malformed, "monic polynomial needs degree >= 1");
  if (a_.front() != 1) fail(ErrorKind::malformed, "a_0 must be 1 (monic), got " + to_string(a_.front()));
}

MonicPoly MonicPoly::monomial(int d) {
  if (d < 1) fail(ErrorKind::malformed, "degree must be >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  a[0] = 1;
  return MonicPoly(std::move(a));
}

Rational MonicPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return a_[static_cast<std::size_t>(i)];
}

VarPoly MonicPoly::to_plain() const {
  const int d = degree();
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    const Rational& ai = a_[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(d - i)] = (i % 2 == 0) ? ai : Rational(-ai);
  }
  return VarPoly(std::move(c));
}

MonicPoly from_plain_coefficients(std::span<const Rational> descending) {
  if (descending.size() < 2) fail(ErrorKind::malformed, "polynomial needs degree >= 1");
  if (descending.front() != 1) {
    fail(ErrorKind::malformed,
         "polynomial is not monic (leading coefficient " + to_string(descending.front()) + "); normalise explicitly");
  }
  std::vector<Rational> a(descending.size());
  for (std::size_t i = 0; i < descending.size(); ++i) a[i] = (i % 2 == 0) ? descending[i] : Rational(-descending[i]);
  return MonicPoly(std::move(a));
}

MonicPoly from_roots(std::span<const Rational> roots) {
  if (roots.empty()) fail(ErrorKind::malformed, "from_roots needs at least one root");
  // e[k] accumulates the k-th elementary symmetric function.
  std::vector<Rational> e(roots.size() + 1);
  e[0] = 1;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += e[k - 1] * roots[j];
  }
  return MonicPoly(std::move(e));
}

MonicPoly dilate(const MonicPoly& p, const Rational& lambda) {
  if (lambda == 0) return MonicPoly::monomial(p.degree());
  std::vector<Rational> a = p.a();
  const Rational inv = 1 / lambda;
  Rational scale = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    scale *= inv;
    a[i] *= scale;
  }
  return MonicPoly(std::move(a));
}

MonicPoly shift(const MonicPoly& p, const Rational& c) {
  // Horner in the ring Q[x] with x -> x + c.
  const VarPoly plain = p.to_plain();
  const VarPoly x_plus_c({c, Rational(1)});
  VarPoly acc;
  for (int k = plain.degree(); k >= 0; --k) acc = acc * x_plus_c + VarPoly::constant(plain.coeff(k));
  std::vector<Rational> desc;
  for (int k = acc.degree(); k >= 0; --k) desc.push_back(acc.coeff(k));
  return from_plain_coefficients(desc);
}

MomentSequence moments(const MonicPoly& p, int count) {
  if (count < 1) fail(ErrorKind::domain, "moment count must be >= 1");
  // Power sums b_k from k a_k = sum_{i=1}^{k} (-1)^{i-1} a_{k-i} b_i.
  std::vector<Rational> b(static_cast<std::size_t>(count) + 1);
  for (int k = 1; k <= count; ++k) {
    Rational s = Rational(k) * p.coefficient(k);
    for (int i = 1; i < k; ++i) {
      const Rational term = p.coefficient(k - i) * b[static_cast<std::size_t>(i)];
      if (i % 2 == 1) s -= term; else s += term;
    }
    b[static_cast<std::size_t>(k)] = (k % 2 == 1) ? s : Rational(-s);
  }
  MomentSequence out;
  out.degree = p.degree();
  out.m.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.m.push_back(b[static_cast<std::size_t>(k)] / p.degree());
  return out;
}

Rational evaluate(const MonicPoly& p, const Rational& x) {
  Rational acc = 1;
  for (int i = 1; i <= p.degree(); ++i) {
    acc *= x;
    if (i % 2 == 0) acc += p.a()[static_cast<std::size_t>(i)]; else acc -= p.a()[static_cast<std::size_t>(i)];
  }
  return acc;
}

double evaluate(const MonicPoly& p, double x) {
  double acc = 1.0;
  for (int i = 1; i <= p.degree(); ++i) {
    const double ai = p.a()[static_cast<std::size_t>(i)].get_d();
    acc = acc * x + ((i % 2 == 0) ? ai : -ai);
  }
  return acc;
}

std::complex<double> evaluate(const MonicPoly& p, std::complex<double> x) {
  std::complex<double> acc = 1.0;
  for (int i = 1; i <= p.degree(); ++i) {
    const double ai = p.a()[static_cast<std::size_t>(i)].get_d();
    acc = acc * x + ((i % 2 == 0) ? ai : -ai);
  }
  return acc;
}

std::vector<std::complex<double>> roots(const MonicPoly& p, double tol) {
  if (!(tol > 0)) fail(ErrorKind::domain, "root tolerance must be positive");
  const int d = p.degree();
  const VarPoly plain = p.to_plain();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -plain.coeff(i).get_d();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) fail(ErrorKind::convergence, "companion eigenvalue iteration failed");

  std::vector<std::complex<double>> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  std::ostringstream bad;
  for (const auto& z : out) {
    double scale = 0.0;
    for (int k = 0; k <= d; ++k) scale += std::abs(plain.coeff(k).get_d()) * std::pow(std::abs(z), k);
    const double residual = std::abs(evaluate(p, z));
    if (residual > tol * std::max(1.0, scale)) bad << " |p(" << z << ")|=" << residual;
  }
  if (!bad.str().empty()) fail(ErrorKind::convergence, "root residuals exceed tolerance:" + bad.str());

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Positive rescaling keeps signs and curbs coefficient growth.
VarPoly normalise_positive(const VarPoly& f) {
  if (f.is_zero()) return f;
  return f * Rational(1 / abs(f.leading()));
}

}  // namespace

int count_distinct_real_roots(const VarPoly& f) {
  if (f.is_zero()) fail(ErrorKind::domain, "zero polynomial has infinitely many roots");
  if (f.degree() == 0) return 0;
  std::vector<VarPoly> seq{normalise_positive(f), normalise_positive(f.derivative())};
  while (true) {
    VarPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(normalise_positive(-r));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : seq) {
    const int lead = sign(s.leading());
    at_pos.push_back(lead);
    at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

std::vector<std::pair<VarPoly, int>> square_free_factorization(const VarPoly& f) {
  std::vector<std::pair<VarPoly, int>> out;
  if (f.degree() < 1) return out;
  const VarPoly g = f.monic();
  const VarPoly dg = g.derivative();
  const VarPoly a0 = gcd(g, dg);
  VarPoly b = divmod(g, a0).first;
  VarPoly c = divmod(dg, a0).first;
  VarPoly dd = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const VarPoly a = gcd(b, dd);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(dd, a).first;
    dd = c - b.derivative();
  }
  return out;
}

RealRootedness is_real_rooted(const MonicPoly& p, bool require_distinct) {
  const auto factors = square_free_factorization(p.to_plain());
  int real_with_multiplicity = 0;
  bool repeated = false;
  for (const auto& [g, mult] : factors) {
    const int r = count_distinct_real_roots(g);
    real_with_multiplicity += r * mult;
    if (mult > 1) repeated = true;
  }
  if (real_with_multiplicity < p.degree()) return RealRootedness::no;
  if (require_distinct && repeated) return RealRootedness::boundary;
  return RealRootedness::yes;
}

}  // namespace ffc
