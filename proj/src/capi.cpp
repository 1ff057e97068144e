#include "ffconv/ffconv.h"

#include <cmath>
#include <cstring>
#include <string>

#include "ffc/convolution.hpp"
#include "ffc/divisibility.hpp"
#include "ffc/error.hpp"
#include "ffc/families.hpp"
#include "ffc/freeprob.hpp"
#include "ffc/json_io.hpp"
#include "ffc/matrix_oracle.hpp"
#include "ffc/partitions.hpp"
#include "ffc/transforms.hpp"

struct ffc_poly {
  ffc::MonicPoly value;
};

namespace {

using ffc::ErrorKind;
using ffc::Rational;
using ffc::json_io::json;
using ffc::json_io::to_json;

thread_local std::string last_error;

ffc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed: return FFC_ERR_MALFORMED;
    case ErrorKind::size_limit: return FFC_ERR_SIZE_LIMIT;
    case ErrorKind::dimension: return FFC_ERR_DIMENSION;
    case ErrorKind::domain: return FFC_ERR_DOMAIN;
    case ErrorKind::index: return FFC_ERR_INDEX;
    case ErrorKind::convergence: return FFC_ERR_CONVERGENCE;
  }
  return FFC_ERR_INTERNAL;
}

template <class F>
ffc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FFC_OK;
  } catch (const ffc::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return FFC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return FFC_ERR_INTERNAL;
  }
}

template <class T>
T* need(T* ptr, const char* what) {
  if (ptr == nullptr) ffc::fail(ErrorKind::malformed, std::string("null ") + what);
  return ptr;
}

char* dup(const json& j) {
  const std::string s = j.dump();
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) { *need(out, "output") = dup(j); }

void emit(ffc::MonicPoly p, ffc_poly** out) { *need(out, "output") = new ffc_poly{std::move(p)}; }

const ffc::MonicPoly& poly(const ffc_poly* p) { return need(p, "polynomial")->value; }

std::vector<long> parse_longs(const char* csv) {
  std::vector<long> out;
  for (const auto& q : ffc::parse_rational_list(need(csv, "list"))) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) ffc::fail(ErrorKind::malformed, "expected integers");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

}  // namespace

extern "C" {

const char* ffc_version(void) { return "1.0.0"; }

const char* ffc_last_error_message(void) { return last_error.c_str(); }

const char* ffc_status_name(ffc_status status) {
  switch (status) {
    case FFC_OK: return "ok";
    case FFC_ERR_INTERNAL: return "internal";
    case FFC_ERR_MALFORMED: return "malformed";
    case FFC_ERR_SIZE_LIMIT: return "size_limit";
    case FFC_ERR_DOMAIN: return "domain";
    case FFC_ERR_DIMENSION: return "dimension";
    case FFC_ERR_CONVERGENCE: return "convergence";
    case FFC_ERR_INDEX: return "index";
  }
  return "unknown";
}

void ffc_string_free(char* s) { delete[] s; }

ffc_status ffc_set_max_partition_size(int n) {
  return guarded([&] { ffc::partitions::set_max_size(n); });
}

int ffc_get_max_partition_size(void) { return ffc::partitions::max_size(); }

ffc_status ffc_poly_from_json(const char* text, ffc_poly** out) {
  return guarded([&] { emit(ffc::json_io::poly_from_json(ffc::json_io::parse(need(text, "json"))), out); });
}

ffc_status ffc_poly_from_roots(const char* csv, ffc_poly** out) {
  return guarded([&] { emit(ffc::from_roots(ffc::parse_rational_list(need(csv, "roots"))), out); });
}

ffc_status ffc_poly_to_json(const ffc_poly* p, char** out) {
  return guarded([&] { emit(to_json(poly(p)), out); });
}

int ffc_poly_degree(const ffc_poly* p) { return p == nullptr ? -1 : p->value.degree(); }

void ffc_poly_free(ffc_poly* p) { delete p; }

ffc_status ffc_boxplus(const ffc_poly* p, const ffc_poly* q, ffc_poly** out) {
  return guarded([&] { emit(ffc::convolution::boxplus(poly(p), poly(q)), out); });
}

ffc_status ffc_boxplus_power(const ffc_poly* p, const char* t, ffc_poly** out) {
  return guarded([&] { emit(ffc::convolution::boxplus_power(poly(p), ffc::parse_rational(need(t, "t"))), out); });
}

ffc_status ffc_cumulants(const ffc_poly* p, int rescaled, char** out) {
  return guarded([&] {
    auto k = ffc::transforms::cumulants_from_coefficients(poly(p));
    if (rescaled) k = ffc::transforms::rescale_cumulants(k);
    emit(to_json(k), out);
  });
}

ffc_status ffc_moments(const ffc_poly* p, int count, char** out) {
  return guarded([&] { emit(to_json(ffc::transforms::moments_from_coefficients(poly(p), count)), out); });
}

ffc_status ffc_r_transform(const ffc_poly* p, char** out) {
  return guarded([&] { emit(to_json(ffc::transforms::truncated_r_transform(poly(p)), "s"), out); });
}

ffc_status ffc_roots(const ffc_poly* p, double tol, char** out) {
  return guarded([&] { emit(to_json(ffc::roots(poly(p), tol)), out); });
}

ffc_status ffc_coeffs_from_cumulants(const char* text, ffc_poly** out) {
  return guarded([&] {
    emit(ffc::transforms::coefficients_from_cumulants(
             ffc::json_io::cumulants_from_json(ffc::json_io::parse(need(text, "json")))),
         out);
  });
}

ffc_status ffc_coeffs_from_moments(const char* text, int d, ffc_poly** out) {
  return guarded([&] {
    emit(ffc::transforms::coefficients_from_moments(ffc::json_io::moments_from_json(ffc::json_io::parse(need(text, "json"))), d),
         out);
  });
}

ffc_status ffc_cumulants_from_moments(const char* text, int d, char** out) {
  return guarded([&] {
    const auto m = ffc::json_io::moments_from_json(ffc::json_io::parse(need(text, "json")));
    emit(to_json(ffc::transforms::cumulants_from_moments(m, d)), out);
  });
}

ffc_status ffc_moments_from_cumulants(const char* text, int count, char** out) {
  return guarded([&] {
    const auto k = ffc::json_io::cumulants_from_json(ffc::json_io::parse(need(text, "json")));
    emit(to_json(ffc::transforms::moments_from_cumulants(k, count)), out);
  });
}

ffc_status ffc_p_sigma(const char* sigma, char** out) {
  return guarded([&] {
    const auto s = ffc::partitions::SetPartition::parse(need(sigma, "partition"));
    emit(json{{"sigma", s.to_string()},
              {"p_sigma", to_json(ffc::transforms::p_sigma(s), "d")},
              {"join_form", to_json(ffc::transforms::p_sigma_join_form(s), "d")},
              {"q_sigma", to_json(ffc::transforms::q_sigma(s), "d")}},
         out);
  });
}

ffc_status ffc_partitions(int n, int noncrossing, int list, char** out) {
  return guarded([&] {
    namespace pt = ffc::partitions;
    pt::check_size(n);
    std::uint64_t all = 0, nc = 0;
    json types = json::array();
    for (const auto& tc : pt::type_classes(n)) {
      all += tc.count_all;
      nc += tc.count_noncrossing;
      types.push_back({{"type", tc.type.to_string()},
                       {"count", tc.count_all},
                       {"count_noncrossing", tc.count_noncrossing},
                       {"mobius", tc.mobius}});
    }
    json j{{"n", n}, {"bell", all}, {"catalan", nc}, {"types", types},
           {"charpoly", to_json(pt::partition_lattice_charpoly(n), "t")}};
    if (list) {
      json items = json::array();
      const auto parts = noncrossing ? pt::enumerate_noncrossing(n) : pt::enumerate_partitions(n);
      for (const auto& p : parts) items.push_back(p.to_string());
      j["partitions"] = items;
    }
    emit(j, out);
  });
}

ffc_status ffc_hermite(int d, int shrunk, ffc_poly** out) {
  return guarded([&] {
    emit(ffc::families::hermite_clt(d, shrunk ? ffc::families::HermiteScaling::shrunk
                                              : ffc::families::HermiteScaling::unit_variance),
         out);
  });
}

ffc_status ffc_poisson(const char* lambda, int d, ffc_poly** out) {
  return guarded([&] { emit(ffc::families::finite_poisson(ffc::parse_rational(need(lambda, "lambda")), d), out); });
}

ffc_status ffc_clt_rescaled_sum(const ffc_poly* p, long n, char** out) {
  return guarded([&] {
    const auto r = ffc::families::clt_rescaled_sum(poly(p), n);
    emit(json{{"poly", to_json(r.poly)}, {"exact", r.exact}}, out);
  });
}

ffc_status ffc_free_moments(const char* r_csv, int count, char** out) {
  return guarded([&] {
    const ffc::FreeCumulantVector r{ffc::parse_rational_list(need(r_csv, "r"))};
    emit(to_json(ffc::freeprob::free_moments_from_free_cumulants(r, count)), out);
  });
}

ffc_status ffc_free_cumulants(const char* text, int count, char** out) {
  return guarded([&] {
    const auto m = ffc::json_io::moments_from_json(ffc::json_io::parse(need(text, "json")));
    emit(to_json(ffc::freeprob::free_cumulants_from_moments(m, count)), out);
  });
}

ffc_status ffc_convergence(const char* r_csv, int n, const char* d_csv, char** out) {
  return guarded([&] {
    const ffc::FreeCumulantVector r{ffc::parse_rational_list(need(r_csv, "r"))};
    emit(to_json(ffc::freeprob::convergence_report(r, n, parse_longs(d_csv))), out);
  });
}

ffc_status ffc_is_cpd(const char* kappa_csv, int* out) {
  return guarded([&] {
    const auto k = ffc::parse_rational_list(need(kappa_csv, "kappa"));
    *need(out, "output") = ffc::divisibility::is_conditionally_positive_definite(k) ? 1 : 0;
  });
}

ffc_status ffc_check_id(const ffc_poly* p, char** out) {
  return guarded([&] { emit(to_json(ffc::divisibility::infinite_divisibility_report(poly(p))), out); });
}

ffc_status ffc_threshold(const ffc_poly* p, const char* t_max, int steps, char** out) {
  return guarded([&] {
    const Rational tmax = ffc::parse_rational(need(t_max, "t_max"));
    const auto t = ffc::divisibility::real_rooted_threshold(poly(p), tmax, steps);
    json j{{"t_max", ffc::to_string(tmax)}, {"steps", steps}};
    j["threshold"] = t ? json(ffc::to_string(*t)) : json(nullptr);
    if (t) j["threshold_float"] = t->get_d();
    emit(j, out);
  });
}

ffc_status ffc_cramer(int d, const char* eps, char** out) {
  return guarded([&] {
    const Rational e = ffc::parse_rational(need(eps, "eps"));
    const auto r = ffc::divisibility::cramer_counterexample(d, e);
    json j = to_json(r);
    j["d"] = d;
    j["eps"] = ffc::to_string(e);
    j["convolution_cumulants"] = to_json(ffc::transforms::cumulants_from_coefficients(r.convolution));
    emit(j, out);
  });
}

ffc_status ffc_verify_mc(const ffc_poly* p, const ffc_poly* q, long samples, uint64_t seed, char** out) {
  return guarded([&] {
    const auto exact = ffc::convolution::boxplus(poly(p), poly(q));
    const auto est = ffc::matrix_oracle::mc_boxplus(poly(p), poly(q), samples, seed);
    json pass = json::array();
    bool all = true;
    for (int i = 0; i <= exact.degree(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      const bool ok =
          std::abs(exact.a()[k].get_d() - est.coeff_mean[k]) <= 5.0 * est.coeff_stderr[k] + 0.02;
      all = all && ok;
      pass.push_back(ok);
    }
    json j = to_json(est);
    j["exact"] = to_json(exact);
    j["pass"] = pass;
    j["all_pass"] = all;
    emit(j, out);
  });
}

}  // extern "C"
