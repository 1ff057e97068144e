#include "ffc/convolution.hpp"

#include "ffc/error.hpp"
#include "ffc/transforms.hpp"

namespace ffc::convolution {

MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q) {
  const int d = p.degree();
  if (q.degree() != d) {
    fail(ErrorKind::dimension,
         "degree mismatch: " + std::to_string(d) + " vs " + std::to_string(q.degree()));
  }
  std::vector<Rational> fact(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) fact[static_cast<std::size_t>(i)] = Rational(factorial(static_cast<unsigned>(i)));
  const auto f = [&](int i) -> const Rational& { return fact[static_cast<std::size_t>(i)]; };

  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    Rational sum = 0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const Rational& ap = p.a()[static_cast<std::size_t>(i)];
      const Rational& aq = q.a()[static_cast<std::size_t>(j)];
      if (ap == 0 || aq == 0) continue;
      sum += f(d - i) * f(d - j) / (f(d) * f(d - k)) * ap * aq;
    }
    a[static_cast<std::size_t>(k)] = sum;
  }
  return MonicPoly(std::move(a));
}

MonicPoly boxplus_power(const MonicPoly& p, const Rational& t) {
  if (t <= 0) fail(ErrorKind::domain, "convolution power needs t > 0, got " + to_string(t));
  CumulantVector k = transforms::cumulants_from_coefficients(p);
  for (auto& x : k.kappa) x *= t;
  return transforms::coefficients_from_cumulants(k);
}

}  // namespace ffc::convolution
