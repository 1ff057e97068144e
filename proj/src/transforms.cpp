#include "ffc/transforms.hpp"

#include <map>

#include "ffc/error.hpp"

namespace ffc::transforms {

namespace {

using partitions::PartitionType;
using partitions::SetPartition;
using partitions::TypeClass;

// prod over blocks of f(|V|), f given on 1..n.
Rational type_product(const PartitionType& t, const std::vector<Rational>& f) {
  Rational r = 1;
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    if (t.counts[i] != 0) r *= pow(f[i + 1], t.counts[i]);
  }
  return r;
}

// Table of x(i), i = 0..n, index 0 unused by type products.
template <class F>
std::vector<Rational> table(int n, F f) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = f(i);
  return out;
}

Rational signed_factorial(int m) {  // (-1)^m (m-1)!
  const Rational f(factorial(static_cast<unsigned>(m - 1)));
  return (m % 2 == 0) ? f : Rational(-f);
}

Rational as_rational(std::uint64_t v) { return Rational(Integer(std::to_string(v), 10)); }

// (d)_pi must not vanish for pi in P(n): (d)_k != 0 for all k <= n.
void guard_pochhammer(const Rational& d, int n) {
  for (int k = 0; k < n; ++k) {
    if (d == k) {
      fail(ErrorKind::domain, "(d)_pi vanishes: d=" + to_string(d) + " is an integer below order n=" + std::to_string(n));
    }
  }
}

CumulantVector as_standard(const CumulantVector& k) {
  return k.variant == CumulantVariant::standard ? k : rescale_cumulants(k);
}

void check_cumulant_vector(const CumulantVector& k) {
  if (k.d < 1 || static_cast<int>(k.kappa.size()) != k.d) {
    fail(ErrorKind::malformed, "cumulant vector must hold exactly d entries");
  }
}

// Kernel sum over pi >= sigma for every type sigma of P(n):
//   inner[s] = sum_{pi >= sigma_s} w(type(pi)).
template <class W>
std::vector<Rational> interval_sums(int n, W w) {
  const auto& classes = partitions::type_classes(n);
  const auto& coarse = partitions::coarsenings(n);
  std::vector<Rational> weights(classes.size());
  for (std::size_t t = 0; t < classes.size(); ++t) weights[t] = w(classes[t]);
  std::vector<Rational> inner(classes.size());
  for (std::size_t s = 0; s < classes.size(); ++s) {
    for (const auto& [t, mult] : coarse[s]) inner[s] += as_rational(mult) * weights[t];
  }
  return inner;
}

}  // namespace

CumulantVector cumulants_from_coefficients(const MonicPoly& p) {
  const int d = p.degree();
  partitions::check_size(d);
  const Rational dq(d);
  guard_pochhammer(dq, d);
  const auto fact = table(d, [](int i) { return Rational(factorial(static_cast<unsigned>(i))); });
  const auto poch = table(d, [&](int i) { return falling_factorial(dq, static_cast<unsigned>(i)); });
  const auto a = table(d, [&](int i) { return p.coefficient(i); });

  CumulantVector out{d, {}, CumulantVariant::standard};
  for (int n = 1; n <= d; ++n) {
    Rational sum = 0;
    for (const TypeClass& tc : partitions::type_classes(n)) {
      const Rational a_pi = type_product(tc.type, a);
      if (a_pi == 0) continue;
      const int m = tc.type.block_count();
      sum += as_rational(tc.count_all) * signed_factorial(m) * type_product(tc.type, fact) * a_pi /
             type_product(tc.type, poch);
    }
    out.kappa.push_back(pow(-dq, n) / (dq * fact[static_cast<std::size_t>(n - 1)]) * sum);
  }
  return out;
}

MonicPoly coefficients_from_cumulants(const CumulantVector& k_in) {
  check_cumulant_vector(k_in);
  const CumulantVector k = as_standard(k_in);
  const int d = k.d;
  partitions::check_size(d);
  const Rational dq(d);
  const auto kappa = table(d, [&](int i) { return i == 0 ? Rational(0) : k.kappa[static_cast<std::size_t>(i - 1)]; });

  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  a[0] = 1;
  for (int n = 1; n <= d; ++n) {
    Rational sum = 0;
    for (const TypeClass& tc : partitions::type_classes(n)) {
      const Rational k_pi = type_product(tc.type, kappa);
      if (k_pi == 0) continue;
      sum += as_rational(tc.count_all) * pow(dq, tc.type.block_count()) * Rational(tc.mobius) * k_pi;
    }
    a[static_cast<std::size_t>(n)] =
        falling_factorial(dq, static_cast<unsigned>(n)) / (pow(dq, n) * factorial(static_cast<unsigned>(n))) * sum;
  }
  return MonicPoly(std::move(a));
}

MonicPoly coefficients_from_moments(const MomentSequence& m, int d) {
  if (d < 1) fail(ErrorKind::domain, "degree must be >= 1");
  if (static_cast<int>(m.m.size()) < d) {
    fail(ErrorKind::index, "need at least d=" + std::to_string(d) + " moments, got " + std::to_string(m.m.size()));
  }
  partitions::check_size(d);
  const Rational dq(d);
  const auto mom = table(d, [&](int i) { return i == 0 ? Rational(0) : m.m[static_cast<std::size_t>(i - 1)]; });

  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  a[0] = 1;
  for (int n = 1; n <= d; ++n) {
    Rational sum = 0;
    for (const TypeClass& tc : partitions::type_classes(n)) {
      const Rational m_pi = type_product(tc.type, mom);
      if (m_pi == 0) continue;
      sum += as_rational(tc.count_all) * pow(dq, tc.type.block_count()) * Rational(tc.mobius) * m_pi;
    }
    a[static_cast<std::size_t>(n)] = sum / factorial(static_cast<unsigned>(n));
  }
  return MonicPoly(std::move(a));
}

MomentSequence moments_from_coefficients(const MonicPoly& p, int count) {
  if (count < 1) fail(ErrorKind::domain, "moment count must be >= 1");
  if (count > partitions::max_size()) return moments(p, count);
  const Rational dq(p.degree());
  const auto fact = table(count, [](int i) { return Rational(factorial(static_cast<unsigned>(i))); });
  const auto a = table(count, [&](int i) { return p.coefficient(i); });

  MomentSequence out;
  out.degree = p.degree();
  for (int n = 1; n <= count; ++n) {
    Rational sum = 0;
    for (const TypeClass& tc : partitions::type_classes(n)) {
      const Rational a_pi = type_product(tc.type, a);
      if (a_pi == 0) continue;
      const int m = tc.type.block_count();
      sum += as_rational(tc.count_all) * signed_factorial(m) * type_product(tc.type, fact) * a_pi;
    }
    const Rational pref = Rational(n % 2 == 0 ? 1 : -1) / (dq * fact[static_cast<std::size_t>(n - 1)]);
    out.m.push_back(pref * sum);
  }
  return out;
}

Rational cumulant_from_moments_at(std::span<const Rational> moments, const Rational& d, int n) {
  partitions::check_size(n);
  if (static_cast<int>(moments.size()) < n) {
    fail(ErrorKind::index, "need " + std::to_string(n) + " moments, got " + std::to_string(moments.size()));
  }
  if (d == 0) fail(ErrorKind::domain, "degree must be nonzero");
  guard_pochhammer(d, n);
  const auto poch = table(n, [&](int i) { return falling_factorial(d, static_cast<unsigned>(i)); });
  const auto mom = table(n, [&](int i) { return i == 0 ? Rational(0) : moments[static_cast<std::size_t>(i - 1)]; });

  // inner(sigma) = sum_{pi >= sigma} (-1)^{|pi|} (|pi|-1)! / (d)_pi
  const auto inner = interval_sums(n, [&](const TypeClass& tc) -> Rational {
    return signed_factorial(tc.type.block_count()) / type_product(tc.type, poch);
  });
  const auto& classes = partitions::type_classes(n);
  Rational sum = 0;
  for (std::size_t s = 0; s < classes.size(); ++s) {
    const Rational m_sigma = type_product(classes[s].type, mom);
    if (m_sigma == 0) continue;
    sum += as_rational(classes[s].count_all) * pow(d, classes[s].type.block_count()) * Rational(classes[s].mobius) *
           m_sigma * inner[s];
  }
  const Rational sign(n % 2 == 0 ? 1 : -1);
  return sign * pow(d, n - 1) / factorial(static_cast<unsigned>(n - 1)) * sum;
}

Rational moment_from_cumulants_at(std::span<const Rational> kappa, const Rational& d, int n) {
  partitions::check_size(n);
  if (d == 0) fail(ErrorKind::domain, "degree must be nonzero");
  const auto poch = table(n, [&](int i) { return falling_factorial(d, static_cast<unsigned>(i)); });
  const auto kap = table(n, [&](int i) {
    return (i == 0 || static_cast<std::size_t>(i) > kappa.size()) ? Rational(0) : kappa[static_cast<std::size_t>(i - 1)];
  });

  // inner(sigma) = P_sigma(d) = sum_{pi >= sigma} (-1)^{|pi|} (d)_pi (|pi|-1)!
  const auto inner = interval_sums(n, [&](const TypeClass& tc) -> Rational {
    return signed_factorial(tc.type.block_count()) * type_product(tc.type, poch);
  });
  const auto& classes = partitions::type_classes(n);
  Rational sum = 0;
  for (std::size_t s = 0; s < classes.size(); ++s) {
    const Rational k_sigma = type_product(classes[s].type, kap);
    if (k_sigma == 0) continue;
    sum += as_rational(classes[s].count_all) * pow(d, classes[s].type.block_count()) * Rational(classes[s].mobius) *
           k_sigma * inner[s];
  }
  const Rational sign(n % 2 == 0 ? 1 : -1);
  return sign / (pow(d, n + 1) * factorial(static_cast<unsigned>(n - 1))) * sum;
}

CumulantVector cumulants_from_moments(const MomentSequence& m, int d) {
  if (d < 1) fail(ErrorKind::domain, "degree must be >= 1");
  partitions::check_size(d);
  if (static_cast<int>(m.m.size()) < d) {
    fail(ErrorKind::index, "need at least d=" + std::to_string(d) + " moments, got " + std::to_string(m.m.size()));
  }
  CumulantVector out{d, {}, CumulantVariant::standard};
  for (int n = 1; n <= d; ++n) out.kappa.push_back(cumulant_from_moments_at(m.m, Rational(d), n));
  return out;
}

MomentSequence moments_from_cumulants(const CumulantVector& k_in, int count) {
  check_cumulant_vector(k_in);
  if (count < 1) fail(ErrorKind::domain, "moment count must be >= 1");
  partitions::check_size(count);
  const CumulantVector k = as_standard(k_in);
  MomentSequence out;
  out.degree = k.d;
  for (int n = 1; n <= count; ++n) out.m.push_back(moment_from_cumulants_at(k.kappa, Rational(k.d), n));
  return out;
}

CumulantVector rescale_cumulants(const CumulantVector& k) {
  check_cumulant_vector(k);
  const Rational dq(k.d);
  CumulantVector out = k;
  for (int n = 1; n <= k.d; ++n) {
    const Rational factor = falling_factorial(dq, static_cast<unsigned>(n)) / pow(dq, n);
    Rational& x = out.kappa[static_cast<std::size_t>(n - 1)];
    if (k.variant == CumulantVariant::standard) x *= factor; else x /= factor;
  }
  out.variant = k.variant == CumulantVariant::standard ? CumulantVariant::rescaled : CumulantVariant::standard;
  return out;
}

VarPoly truncated_r_transform(const MonicPoly& p) { return VarPoly(cumulants_from_coefficients(p).kappa); }

VarPoly p_sigma(const SetPartition& sigma) {
  const int n = sigma.size();
  partitions::check_size(n);
  std::map<std::vector<int>, std::uint64_t> above;  // block sizes of pi -> multiplicity
  partitions::for_each_partition(n, [&](const SetPartition& pi) {
    if (partitions::refines(sigma, pi)) ++above[pi.block_sizes()];
  });
  std::vector<VarPoly> poch(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) poch[static_cast<std::size_t>(k)] = VarPoly::falling_factorial(static_cast<unsigned>(k));
  VarPoly out;
  for (const auto& [sizes, mult] : above) {
    VarPoly term = VarPoly::constant(as_rational(mult) * signed_factorial(static_cast<int>(sizes.size())));
    for (int s : sizes) term *= poch[static_cast<std::size_t>(s)];
    out += term;
  }
  return out;
}

VarPoly p_sigma_join_form(const SetPartition& sigma) {
  const int n = sigma.size();
  partitions::check_size(n);
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) + 1, 0);
  partitions::for_each_partition(n, [&](const SetPartition& rho) {
    if (partitions::join(rho, sigma).block_count() == 1) {
      coeff[static_cast<std::size_t>(rho.block_count())] += partitions::mobius_from_zero(rho);
    }
  });
  std::vector<Rational> c;
  for (auto v : coeff) c.emplace_back(static_cast<long>(v));
  return VarPoly(std::move(c));
}

VarPoly q_sigma(const SetPartition& sigma) {
  const int n = sigma.size();
  const int blocks = sigma.block_count();
  Rational scale = Rational(factorial(static_cast<unsigned>(n + 1 - blocks))) /
                   (Rational(factorial(static_cast<unsigned>(n - 1))) * as_rational(partitions::block_size_product(sigma)));
  if (blocks % 2 == 1) scale = -scale;
  return p_sigma(sigma) * scale;
}

}  // namespace ffc::transforms
