// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "ffc/convolution.hpp"
#include "ffc/divisibility.hpp"
#include "ffc/families.hpp"
#include "ffc/freeprob.hpp"
#include "ffc/matrix_oracle.hpp"
#include "ffc/partitions.hpp"
#include "ffc/transforms.hpp"
#include "support.hpp"

using namespace ffc;
using testing::Q;
using testing::Qs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failing check.
struct Checker {
  Outcome out;
  void expect(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

std::vector<Rational> kappa(const MonicPoly& p) { return transforms::cumulants_from_coefficients(p).kappa; }

Outcome round_trips() {
  Checker c;
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + i % 10;
    const MonicPoly p = testing::random_poly(rng, d);
    const CumulantVector k = transforms::cumulants_from_coefficients(p);
    const MomentSequence m = transforms::moments_from_coefficients(p, d);
    c.expect(transforms::coefficients_from_cumulants(k) == p, "coefficients<-cumulants, d=" + std::to_string(d));
    c.expect(transforms::coefficients_from_moments(m, d) == p, "coefficients<-moments, d=" + std::to_string(d));
    c.expect(transforms::cumulants_from_moments(m, d) == k, "cumulants<-moments, d=" + std::to_string(d));
    c.expect(transforms::moments_from_cumulants(k, d).m == m.m, "moments<-cumulants, d=" + std::to_string(d));
  }
  return c.out;
}

Outcome additivity() {
  Checker c;
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 100; ++i) {
    const int d = 1 + i % 10;
    const MonicPoly p = testing::random_poly(rng, d), q = testing::random_poly(rng, d);
    const auto kp = kappa(p), kq = kappa(q), ks = kappa(convolution::boxplus(p, q));
    for (int n = 0; n < d; ++n) {
      const auto j = static_cast<std::size_t>(n);
      c.expect(ks[j] == kp[j] + kq[j], "kappa_" + std::to_string(n + 1) + " at d=" + std::to_string(d));
    }
  }
  return c.out;
}

Outcome monte_carlo() {
  Checker c;
  std::mt19937_64 rng(1003);
  std::vector<std::pair<MonicPoly, MonicPoly>> pairs{{from_roots(Qs("-1,1")), from_roots(Qs("-1,1"))}};
  pairs.emplace_back(testing::random_real_rooted(rng, 3), testing::random_real_rooted(rng, 3));
  pairs.emplace_back(testing::random_real_rooted(rng, 3), testing::random_real_rooted(rng, 3));
  c.expect(convolution::boxplus(pairs[0].first, pairs[0].second) == from_plain_coefficients(Qs("1,0,-2")),
           "(x^2-1) boxplus (x^2-1) != x^2-2");
  std::uint64_t seed = 42;
  for (const auto& [p, q] : pairs) {
    const MonicPoly exact = convolution::boxplus(p, q);
    const auto est = matrix_oracle::mc_boxplus(p, q, 100000, seed++);
    for (int i = 0; i <= exact.degree(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double gap = std::abs(exact.a()[k].get_d() - est.coeff_mean[k]);
      std::ostringstream msg;
      msg << "a_" << i << " exact " << exact.a()[k].get_d() << " mc " << est.coeff_mean[k] << " se "
          << est.coeff_stderr[k];
      c.expect(gap <= 5 * est.coeff_stderr[k] + 0.02, msg.str());
    }
  }
  return c.out;
}

Outcome hermite() {
  Checker c;
  for (int d = 1; d <= 12; ++d) {
    std::vector<Rational> desc(static_cast<std::size_t>(d) + 1);
    for (int i = 0; 2 * i <= d; ++i) {
      Rational v = Rational(factorial(static_cast<unsigned>(d))) /
                   (Rational(factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(d - 2 * i))) *
                    pow(Rational(2), i) * pow(Rational(d), i));
      desc[static_cast<std::size_t>(2 * i)] = (i % 2 == 0) ? v : Rational(-v);
    }
    const MonicPoly h = families::hermite_clt(d);
    c.expect(h == from_plain_coefficients(desc), "expansion differs at d=" + std::to_string(d));
    std::vector<Rational> unit(static_cast<std::size_t>(d));
    if (d >= 2) unit[1] = 1;
    c.expect(kappa(h) == unit, "cumulants not (0,1,0,...) at d=" + std::to_string(d));
  }
  return c.out;
}

Outcome poisson() {
  Checker c;
  for (int d = 1; d <= 10; ++d) {
    const Rational inv(1, d);
    const MonicPoly p = families::finite_poisson(inv, d);
    std::vector<Rational> desc(static_cast<std::size_t>(d) + 1);
    desc[0] = 1;
    desc[1] = -1;
    const std::string at = " at d=" + std::to_string(d);
    c.expect(p == from_plain_coefficients(desc), "not x^d - x^{d-1}" + at);
    const std::vector<Rational> flat(static_cast<std::size_t>(d), inv);
    c.expect(kappa(p) == flat, "cumulants not 1/d" + at);
    c.expect(transforms::moments_from_coefficients(p, d).m == flat, "moments not 1/d" + at);
    c.expect(moments(p, 2 * d).m == std::vector<Rational>(static_cast<std::size_t>(2 * d), inv), "higher moments" + at);
    for (int j = 1; j < d; ++j) {
      const MonicPoly q = families::finite_poisson(make_rational(j, d), d);
      for (int n = j + 1; n <= d; ++n) {
        c.expect(q.a()[static_cast<std::size_t>(n)] == 0, "trailing a_" + std::to_string(n) + " nonzero" + at);
      }
    }
  }
  return c.out;
}

Outcome cramer_numeric() {
  Checker c;
  const MonicPoly q = convolution::boxplus_power(families::finite_poisson(Q("1/4"), 4), Q("4/3"));
  c.expect(q == from_plain_coefficients(Qs("1,-4/3,1/6,1/54,5/2592")), "coefficients differ");
  const std::vector<std::complex<double>> expected{
      {-0.0472193, -0.0656519}, {-0.0472193, 0.0656519}, {0.250561, 0.0}, {1.17721, 0.0}};
  const auto r = roots(q);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    std::ostringstream msg;
    msg << "root " << r[i] << " vs " << expected[i];
    c.expect(std::abs(r[i] - expected[i]) <= 1e-4, msg.str());
  }
  return c.out;
}

Outcome convergence() {
  Checker c;
  std::mt19937_64 rng(1007);
  const std::vector<long> ds{16, 32, 64, 128};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> r;
    for (int i = 0; i < 6; ++i) r.push_back(testing::random_rational(rng));
    for (int n = 1; n <= 6; ++n) {
      const auto rep = freeprob::convergence_report({r}, n, ds);
      // Heuristic scale S/d with S = sum over NC(n) of |r_pi|.
      Rational scale = 0;
      for (const auto& pi : partitions::enumerate_noncrossing(n)) {
        scale += abs(partitions::multiplicative_extension(r, pi));
      }
      const std::string at = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
      for (std::size_t i = 1; i < rep.errors.size(); ++i) {
        const Rational& prev = rep.errors[i - 1];
        const Rational& cur = rep.errors[i];
        const bool ok = prev == 0 ? cur == 0 : cur / prev <= Q("0.65");
        std::ostringstream msg;
        msg << at << " ratio at d=" << ds[i] << ": " << (prev == 0 ? 0.0 : Rational(cur / prev).get_d());
        c.expect(ok, msg.str());
      }
      c.expect(rep.errors.back() <= 10 * scale / 128, at + " final error above 10 S/d");
    }
  }
  return c.out;
}

Outcome p_sigma_structure() {
  Checker c;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& sigma : partitions::enumerate_partitions(n)) {
      const VarPoly p = transforms::p_sigma(sigma);
      const int b = sigma.block_count();
      Rational lead = Rational(factorial(static_cast<unsigned>(n - 1)) *
                               Integer(std::to_string(partitions::block_size_product(sigma)), 10)) /
                      factorial(static_cast<unsigned>(n + 1 - b));
      if (b % 2 == 1) lead = -lead;
      const std::string at = " for " + sigma.to_string();
      c.expect(p.degree() == n + 1 - b, "degree" + at);
      c.expect(p.leading() == lead, "leading coefficient" + at);
      c.expect(transforms::p_sigma_join_form(sigma) == p * Rational(transforms::kJoinFormSign), "join form" + at);
      const VarPoly q = transforms::q_sigma(sigma);
      c.expect(q.degree() == n + 1 - b && q.leading() == 1, "Q_sigma not monic" + at);
    }
  }
  for (int n = 1; n <= 10; ++n) {
    c.expect(partitions::partition_lattice_charpoly(n) == VarPoly::falling_factorial(static_cast<unsigned>(n)),
             "characteristic polynomial at n=" + std::to_string(n));
  }
  return c.out;
}

Outcome partition_statistics() {
  Checker c;
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 10; ++n) {
    const auto all = partitions::enumerate_partitions(n);
    c.expect(all.size() == bell[n], "Bell(" + std::to_string(n) + ")");
    c.expect(partitions::enumerate_noncrossing(n).size() == catalan[n], "Catalan(" + std::to_string(n) + ")");
    std::map<partitions::PartitionType, std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const auto& p : all) {
      auto& [a, nc] = seen[partitions::partition_type(p)];
      ++a;
      if (partitions::is_noncrossing(p)) ++nc;
    }
    for (const auto& [t, counts] : seen) {
      c.expect(partitions::count_by_type(t, partitions::Lattice::all) == Integer(std::to_string(counts.first)),
               "P(n) type count " + t.to_string());
      c.expect(partitions::count_by_type(t, partitions::Lattice::noncrossing) == Integer(std::to_string(counts.second)),
               "NC(n) type count " + t.to_string());
    }
  }
  return c.out;
}

Outcome divisibility_checks() {
  Checker c;
  for (int d = 2; d <= 12; ++d) {
    const auto rep = divisibility::infinite_divisibility_report(families::hermite_clt(d));
    const std::string at = " at d=" + std::to_string(d);
    c.expect(rep.cpd_standard && rep.cpd_rescaled, "Hermite fails a CPD condition" + at);
    c.expect(rep.verdict == divisibility::Verdict::infinitely_divisible, "Hermite not classified divisible" + at);
  }
  const auto kt = transforms::rescale_cumulants(transforms::cumulants_from_coefficients(families::finite_poisson(1, 4)));
  c.expect(kt.kappa == Qs("1,3/4,3/8,3/32"), "rescaled Poisson(1,4) cumulants");
  c.expect(kt.kappa[1] * kt.kappa[3] - kt.kappa[2] * kt.kappa[2] == Q("-9/128"), "Hankel minor != -9/128");
  c.expect(!divisibility::is_conditionally_positive_definite(kt.kappa), "Poisson(1,4) rescaled passes CPD");
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 40; ++i) {
    const int d = 3 + i % 6;
    const auto rep = divisibility::infinite_divisibility_report(testing::random_real_rooted(rng, d));
    if (rep.centered_normalized == families::hermite_clt(d)) continue;
    c.expect(rep.verdict == divisibility::Verdict::not_infinitely_divisible,
             "non-Hermite classified divisible at d=" + std::to_string(d));
  }
  return c.out;
}

Outcome thresholds() {
  Checker c;
  std::mt19937_64 rng(1011);
  const Rational t_max(1 << 20);
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 5;
    const MonicPoly p = testing::random_real_rooted(rng, d);
    const auto t = divisibility::real_rooted_threshold(p, t_max);
    const std::string at = "seed " + std::to_string(i) + " d=" + std::to_string(d);
    c.expect(t.has_value(), at + ": no threshold below 2^20");
    if (!t) continue;
    const VarPoly f = convolution::boxplus_power(p, 2 * *t).to_plain();
    c.expect(count_distinct_real_roots(f) == d, at + ": fewer than d distinct real roots at 2T");
  }
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact round trips between coefficients, moments and cumulants", 60, round_trips},
      {2, "cumulant additivity under boxplus", 30, additivity},
      {3, "Monte-Carlo oracle agrees with exact boxplus", 60, monte_carlo},
      {4, "Hermite fixed point", 0, hermite},
      {5, "finite Poisson family", 0, poisson},
      {6, "fractional power of Poisson(1/4,4) and its roots", 0, cramer_numeric},
      {7, "finite cumulants converge to free cumulants", 60, convergence},
      {8, "P_sigma / Q_sigma structure", 0, p_sigma_structure},
      {9, "partition statistics", 0, partition_statistics},
      {10, "infinite divisibility classification", 0, divisibility_checks},
      {11, "real-rootedness threshold", 120, thresholds},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_s > 0 && secs > c.budget_s) {
      o = {false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s"};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s)"
              << (o.ok ? "" : ": " + o.detail) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
