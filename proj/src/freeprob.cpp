#include "ffc/freeprob.hpp"

#include "ffc/error.hpp"
#include "ffc/partitions.hpp"
#include "ffc/transforms.hpp"

namespace ffc::freeprob {

namespace {

Rational entry(const std::vector<Rational>& v, int i) {
  return (i >= 1 && static_cast<std::size_t>(i) <= v.size()) ? v[static_cast<std::size_t>(i - 1)] : Rational(0);
}

Rational nc_sum(const std::vector<Rational>& f, int n, bool skip_one_block) {
  Rational sum = 0;
  for (const auto& tc : partitions::type_classes(n)) {
    if (tc.count_noncrossing == 0) continue;
    if (skip_one_block && tc.type.block_count() == 1) continue;
    Rational term(Integer(std::to_string(tc.count_noncrossing), 10));
    for (std::size_t i = 0; i < tc.type.counts.size() && term != 0; ++i) {
      if (tc.type.counts[i] != 0) term *= pow(entry(f, static_cast<int>(i) + 1), tc.type.counts[i]);
    }
    sum += term;
  }
  return sum;
}

void check_count(int count) {
  if (count < 1) fail(ErrorKind::domain, "order must be >= 1");
  partitions::check_size(count);
}

}  // namespace

MomentSequence free_moments_from_free_cumulants(const FreeCumulantVector& r, int count) {
  check_count(count);
  MomentSequence out;
  for (int n = 1; n <= count; ++n) out.m.push_back(nc_sum(r.entries, n, false));
  return out;
}

FreeCumulantVector free_cumulants_from_moments(const MomentSequence& m, int count) {
  check_count(count);
  if (static_cast<int>(m.m.size()) < count) {
    fail(ErrorKind::index, "need " + std::to_string(count) + " moments, got " + std::to_string(m.m.size()));
  }
  FreeCumulantVector r;
  for (int n = 1; n <= count; ++n) {
    r.entries.push_back(m.m[static_cast<std::size_t>(n - 1)] - nc_sum(r.entries, n, true));
  }
  return r;
}

ConvergenceReport convergence_report(const FreeCumulantVector& r, int n, const std::vector<long>& d_values) {
  check_count(n);
  ConvergenceReport out;
  out.n = n;
  out.d_values = d_values;
  out.free_kappa = entry(r.entries, n);
  const MomentSequence m = free_moments_from_free_cumulants(r, n);
  for (long d : d_values) {
    if (d < n) {
      fail(ErrorKind::domain, "degree d=" + std::to_string(d) + " below order n=" + std::to_string(n));
    }
    const Rational k = transforms::cumulant_from_moments_at(m.m, Rational(d), n);
    out.finite_kappa.push_back(k);
    out.errors.push_back(abs(k - out.free_kappa));
  }
  return out;
}

}  // namespace ffc::freeprob
