// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffconv/ffconv.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Failure {
  ffc_status status;
  std::string message;
};

int exit_code(ffc_status s) {
  switch (s) {
    case FFC_OK: return 0;
    case FFC_ERR_MALFORMED:
    case FFC_ERR_INDEX: return 3;
    case FFC_ERR_SIZE_LIMIT: return 4;
    case FFC_ERR_DOMAIN:
    case FFC_ERR_DIMENSION:
    case FFC_ERR_CONVERGENCE: return 5;
    default: return 1;
  }
}

void check(ffc_status s) {
  if (s != FFC_OK) throw Failure{s, ffc_last_error_message()};
}

// Owning wrappers for C API results.
struct Poly {
  ffc_poly* p = nullptr;
  Poly() = default;
  Poly(const Poly&) = delete;
  Poly(Poly&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~Poly() { ffc_poly_free(p); }
};

json take(char* s) {
  json j = json::parse(s);
  ffc_string_free(s);
  return j;
}

std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw Failure{FFC_ERR_MALFORMED, "cannot read '" + arg + "' (expected inline JSON or a file path)"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poly load_poly(const std::string& arg) {
  Poly out;
  check(ffc_poly_from_json(read_source(arg).c_str(), &out.p));
  return out;
}

Poly roots_poly(const std::string& csv) {
  Poly out;
  check(ffc_poly_from_roots(csv.c_str(), &out.p));
  return out;
}

struct Globals {
  int nmax = 12;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool with_roots = false;
};

json poly_json(const Poly& p, const Globals& g) {
  char* s = nullptr;
  check(ffc_poly_to_json(p.p, &s));
  json j = take(s);
  if (g.with_roots) {
    check(ffc_roots(p.p, g.tol, &s));
    j["roots"] = take(s);
  }
  return j;
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

// Positional JSON/file arguments followed by any --roots lists.
struct PolyArgs {
  std::vector<std::string> sources;
  std::vector<std::string> roots;

  void attach(CLI::App* cmd, int count) {
    cmd->add_option("poly", sources, "polynomial as inline JSON or a JSON file")->expected(0, count);
    cmd->add_option("--roots", roots, "polynomial given by comma separated rational roots")->allow_extra_args(false);
  }

  std::vector<Poly> load(std::size_t needed) const {
    std::vector<Poly> out;
    for (const auto& s : sources) out.push_back(load_poly(s));
    for (const auto& r : roots) out.push_back(roots_poly(r));
    if (out.size() != needed) {
      throw Failure{FFC_ERR_MALFORMED, "expected " + std::to_string(needed) + " polynomial(s), got " +
                                           std::to_string(out.size())};
    }
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite free additive convolution and cumulants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--nmax", g.nmax, "partition size cap")->check(CLI::Range(1, 16));
  app.add_option("--tol", g.tol, "floating tolerance for root finding");
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--with-roots", g.with_roots, "attach numeric roots to polynomial outputs");
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");

  PolyArgs convolve_args, power_args, cum_args, mom_args, rt_args, id_args, thr_args, mc_args, clt_args;
  std::string t = "1", tmax = "1048576", eps = "1/32", lambda = "1", family_name, r_list = "0,1", d_list = "16,32,64";
  std::string from_cumulants, from_moments, sigma;
  int count = 0, d = 0, n = 0, steps = 8;
  long samples = 100000, clt_n = 1;
  bool rescaled = false, shrunk = false, nc = false, list = false, to_moments = false;

  auto* convolve = app.add_subcommand("convolve", "p boxplus_d q");
  convolve_args.attach(convolve, 2);

  auto* power = app.add_subcommand("power", "fractional convolution power p^{boxplus t}");
  power_args.attach(power, 1);
  power->add_option("--t", t, "positive rational exponent")->required();

  auto* cumulants = app.add_subcommand("cumulants", "finite free cumulants");
  cum_args.attach(cumulants, 1);
  cumulants->add_flag("--rescaled", rescaled, "emit (d)_n/d^n kappa_n");

  auto* moments = app.add_subcommand("moments", "moments m_1..m_N");
  mom_args.attach(moments, 1);
  moments->add_option("--count", count, "number of moments (default d)");

  auto* coeffs = app.add_subcommand("coeffs", "coefficients from cumulants or moments");
  auto* fc = coeffs->add_option("--from-cumulants", from_cumulants, "cumulant JSON or file");
  auto* fm = coeffs->add_option("--from-moments", from_moments, "moment JSON or file");
  fc->excludes(fm);
  coeffs->add_option("--d", d, "degree (moments input)");
  coeffs->add_flag("--to-moments", to_moments, "with --from-cumulants, emit --count moments instead");
  coeffs->add_option("--count", count, "moment count for --to-moments");

  auto* rtransform = app.add_subcommand("rtransform", "truncated R-transform");
  rt_args.attach(rtransform, 1);

  auto* family = app.add_subcommand("family", "special polynomials: hermite, poisson, clt");
  family->add_option("name", family_name)->required()->check(CLI::IsMember({"hermite", "poisson", "clt"}));
  family->add_option("--d", d, "degree");
  family->add_option("--lambda", lambda, "Poisson rate (d*lambda a positive integer)");
  family->add_flag("--shrunk-variance", shrunk, "Hermite with kappa_2 = 1 - 1/d");
  family->add_option("--n", clt_n, "number of summands for clt");
  clt_args.attach(family, 1);

  auto* converge = app.add_subcommand("converge", "finite vs free cumulants along d");
  converge->add_option("--r", r_list, "free cumulants r_1,r_2,...");
  converge->add_option("--n", n, "order")->required();
  converge->add_option("--d", d_list, "comma separated degrees");

  auto* check_id = app.add_subcommand("check-id", "infinite divisibility report");
  id_args.attach(check_id, 1);

  auto* threshold = app.add_subcommand("threshold", "real-rootedness threshold of p^{boxplus t}");
  thr_args.attach(threshold, 1);
  threshold->add_option("--tmax", tmax, "largest t scanned");
  threshold->add_option("--steps", steps, "bisection halvings");

  auto* cramer = app.add_subcommand("cramer", "Cramer-failure pair");
  cramer->add_option("--d", d, "degree >= 3")->required();
  cramer->add_option("--eps", eps, "positive rational");

  auto* verify = app.add_subcommand("verify-mc", "Monte-Carlo check of boxplus");
  mc_args.attach(verify, 2);
  verify->add_option("--samples", samples, "sample count (>= 1000)");

  auto* parts = app.add_subcommand("partitions", "partition lattice statistics");
  parts->add_option("--n", n, "ground set size");
  parts->add_flag("--nc", nc, "list non-crossing partitions");
  parts->add_flag("--list", list, "list the partitions");
  parts->add_option("--sigma", sigma, "report P_sigma, join form and Q_sigma for a partition like {1,3|2}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}, {"exit_code", 2}}.dump() << '\n';
    return 2;
  }

  try {
    check(ffc_set_max_partition_size(g.nmax));
    char* s = nullptr;
    if (convolve->parsed()) {
      auto ps = convolve_args.load(2);
      Poly out;
      check(ffc_boxplus(ps[0].p, ps[1].p, &out.p));
      print(poly_json(out, g));
    } else if (power->parsed()) {
      auto ps = power_args.load(1);
      Poly out;
      check(ffc_boxplus_power(ps[0].p, t.c_str(), &out.p));
      print(poly_json(out, g));
    } else if (cumulants->parsed()) {
      auto ps = cum_args.load(1);
      check(ffc_cumulants(ps[0].p, rescaled ? 1 : 0, &s));
      print(take(s));
    } else if (moments->parsed()) {
      auto ps = mom_args.load(1);
      check(ffc_moments(ps[0].p, count > 0 ? count : ffc_poly_degree(ps[0].p), &s));
      print(take(s));
    } else if (coeffs->parsed()) {
      if (!from_cumulants.empty()) {
        const std::string text = read_source(from_cumulants);
        if (to_moments) {
          check(ffc_moments_from_cumulants(text.c_str(), count, &s));
          print(take(s));
        } else {
          Poly out;
          check(ffc_coeffs_from_cumulants(text.c_str(), &out.p));
          print(poly_json(out, g));
        }
      } else if (!from_moments.empty()) {
        const std::string text = read_source(from_moments);
        if (d < 1) {
          const json m = json::parse(text, nullptr, false);
          if (m.is_object() && m.contains("degree") && m["degree"].is_number_integer()) d = m["degree"].get<int>();
        }
        Poly out;
        check(ffc_coeffs_from_moments(text.c_str(), d, &out.p));
        print(poly_json(out, g));
      } else {
        throw Failure{FFC_ERR_MALFORMED, "coeffs needs --from-cumulants or --from-moments"};
      }
    } else if (rtransform->parsed()) {
      auto ps = rt_args.load(1);
      check(ffc_r_transform(ps[0].p, &s));
      print(take(s));
    } else if (family->parsed()) {
      if (family_name == "clt") {
        auto ps = clt_args.load(1);
        check(ffc_clt_rescaled_sum(ps[0].p, clt_n, &s));
        print(take(s));
      } else {
        Poly out;
        if (family_name == "hermite") check(ffc_hermite(d, shrunk ? 1 : 0, &out.p));
        else check(ffc_poisson(lambda.c_str(), d, &out.p));
        print(poly_json(out, g));
      }
    } else if (converge->parsed()) {
      check(ffc_convergence(r_list.c_str(), n, d_list.c_str(), &s));
      print(take(s));
    } else if (check_id->parsed()) {
      auto ps = id_args.load(1);
      check(ffc_check_id(ps[0].p, &s));
      print(take(s));
    } else if (threshold->parsed()) {
      auto ps = thr_args.load(1);
      check(ffc_threshold(ps[0].p, tmax.c_str(), steps, &s));
      print(take(s));
    } else if (cramer->parsed()) {
      check(ffc_cramer(d, eps.c_str(), &s));
      print(take(s));
    } else if (verify->parsed()) {
      auto ps = mc_args.load(2);
      check(ffc_verify_mc(ps[0].p, ps[1].p, samples, g.seed, &s));
      print(take(s));
    } else if (parts->parsed()) {
      if (!sigma.empty()) check(ffc_p_sigma(sigma.c_str(), &s));
      else check(ffc_partitions(n, nc ? 1 : 0, list ? 1 : 0, &s));
      print(take(s));
    }
  } catch (const Failure& f) {
    const int code = exit_code(f.status);
    std::cerr << json{{"error", ffc_status_name(f.status)}, {"message", f.message}, {"exit_code", code}}.dump()
              << '\n';
    return code;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}, {"exit_code", 1}}.dump() << '\n';
    return 1;
  }
  return 0;
}
