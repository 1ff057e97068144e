#include "ffc/families.hpp"

#include "ffc/convolution.hpp"
#include "ffc/error.hpp"
#include "ffc/transforms.hpp"

namespace ffc::families {

MonicPoly hermite_clt(int d, HermiteScaling scaling) {
  if (d < 1) fail(ErrorKind::domain, "degree must be >= 1");
  const Rational dq(d);
  const Rational variance = scaling == HermiteScaling::shrunk ? Rational(1 - 1 / dq) : Rational(1);
  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; 2 * i <= d; ++i) {
    Rational v = falling_factorial(dq, static_cast<unsigned>(2 * i)) / pow(dq, i) /
                 (pow(Rational(2), i) * factorial(static_cast<unsigned>(i))) * pow(variance, i);
    a[static_cast<std::size_t>(2 * i)] = (i % 2 == 0) ? v : Rational(-v);
  }
  return MonicPoly(std::move(a));
}

MonicPoly finite_poisson(const Rational& lambda, int d) {
  if (d < 1) fail(ErrorKind::domain, "degree must be >= 1");
  const Rational dl = lambda * d;
  if (dl <= 0 || dl.get_den() != 1) {
    fail(ErrorKind::domain, "d*lambda must be a positive integer, got " + to_string(dl));
  }
  const Rational dq(d);
  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    a[static_cast<std::size_t>(n)] = falling_factorial(dq, static_cast<unsigned>(n)) /
                                     (pow(dq, n) * factorial(static_cast<unsigned>(n))) *
                                     falling_factorial(dl, static_cast<unsigned>(n));
  }
  return MonicPoly(std::move(a));
}

CltResult clt_rescaled_sum(const MonicPoly& p, long n) {
  if (n < 1) fail(ErrorKind::domain, "number of summands must be >= 1");
  const Rational k1 = transforms::cumulants_from_coefficients(p).kappa.front();
  if (k1 != 0) fail(ErrorKind::domain, "input must be centred (kappa_1 = " + to_string(k1) + "); shift it first");
  const MonicPoly sum = convolution::boxplus_power(p, Rational(n));
  if (const auto root = rational_sqrt(Rational(n))) return {dilate(sum, *root), true};
  return {dilate(sum, approximate_sqrt(Rational(n))), false};
}

}  // namespace ffc::families
