#include "ffc/json_io.hpp"

#include "ffc/error.hpp"

namespace ffc::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::malformed, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::malformed, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::malformed, std::string("invalid JSON: ") + e.what());
  }
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  if (!j.is_array()) fail(ErrorKind::malformed, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      out.push_back(parse_rational(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      out.push_back(parse_rational(e.dump()));
    } else {
      fail(ErrorKind::malformed, "rationals must be \"p/q\" strings or integers, got " + e.dump());
    }
  }
  return out;
}

json to_json(const MonicPoly& p) { return {{"degree", p.degree()}, {"a", rationals(p.a())}}; }

MonicPoly poly_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::malformed, "polynomial must be a JSON object");
  std::optional<MonicPoly> p;
  if (j.contains("a")) {
    p = MonicPoly(rationals_from(j.at("a")));
  } else if (j.contains("coefficients")) {
    p = from_plain_coefficients(rationals_from(j.at("coefficients")));
  } else if (j.contains("roots")) {
    p = from_roots(rationals_from(j.at("roots")));
  } else {
    fail(ErrorKind::malformed, "polynomial needs one of \"a\", \"coefficients\", \"roots\"");
  }
  if (j.contains("degree") && int_field(j, "degree") != p->degree()) {
    fail(ErrorKind::malformed, "\"degree\" disagrees with the coefficient count");
  }
  return *p;
}

json to_json(const CumulantVector& k) {
  return {{"d", k.d},
          {"variant", k.variant == CumulantVariant::standard ? "standard" : "rescaled"},
          {"kappa", rationals(k.kappa)}};
}

CumulantVector cumulants_from_json(const json& j) {
  CumulantVector k;
  k.kappa = rationals_from(field(j, "kappa"));
  k.d = j.contains("d") ? int_field(j, "d") : static_cast<int>(k.kappa.size());
  if (j.contains("variant")) {
    const json& v = j.at("variant");
    if (v == "standard") k.variant = CumulantVariant::standard;
    else if (v == "rescaled") k.variant = CumulantVariant::rescaled;
    else fail(ErrorKind::malformed, "variant must be \"standard\" or \"rescaled\"");
  }
  if (k.d < 1 || static_cast<int>(k.kappa.size()) != k.d) {
    fail(ErrorKind::malformed, "\"kappa\" must hold exactly d entries");
  }
  return k;
}

json to_json(const MomentSequence& m) {
  return {{"degree", m.degree ? json(*m.degree) : json(nullptr)}, {"m", rationals(m.m)}};
}

MomentSequence moments_from_json(const json& j) {
  MomentSequence m;
  m.m = rationals_from(field(j, "m"));
  if (j.contains("degree") && !j.at("degree").is_null()) m.degree = int_field(j, "degree");
  return m;
}

json to_json(const VarPoly& p, std::string_view var) {
  return {{"var", var}, {"coeffs", rationals(p.coeffs())}, {"text", p.to_string(std::string(var))}};
}

json to_json(const FreeCumulantVector& r) { return {{"r", rationals(r.entries)}}; }

json to_json(const ConvergenceReport& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.d_values.size(); ++i) {
    rows.push_back({{"d", r.d_values[i]},
                    {"kappa", to_string(r.finite_kappa[i])},
                    {"error", to_string(r.errors[i])},
                    {"error_float", r.errors[i].get_d()}});
  }
  return {{"n", r.n}, {"free_kappa", to_string(r.free_kappa)}, {"rows", rows}};
}

json to_json(const divisibility::IDReport& r) {
  return {{"centered_normalized", to_json(r.centered_normalized)},
          {"normalized", r.normalized},
          {"kappa", rationals(r.kappa)},
          {"cpd_standard", r.cpd_standard},
          {"cpd_rescaled", r.cpd_rescaled},
          {"higher_cumulants_zero", r.higher_cumulants_zero},
          {"verdict", divisibility::to_string(r.verdict)}};
}

json to_json(const divisibility::CramerResult& r) {
  return {{"p_plus", to_json(r.p_plus)},
          {"p_minus", to_json(r.p_minus)},
          {"convolution", to_json(r.convolution)},
          {"plus_real_rooted", r.plus_real_rooted},
          {"minus_real_rooted", r.minus_real_rooted},
          {"half_plus", to_json(r.half_plus)},
          {"half_minus", to_json(r.half_minus)},
          {"half_convolution", to_json(r.half_convolution)}};
}

json to_json(const matrix_oracle::MCEstimate& e) {
  return {{"d", e.d},
          {"samples", e.samples},
          {"seed", e.seed},
          {"coeff_mean", e.coeff_mean},
          {"coeff_stderr", e.coeff_stderr}};
}

json to_json(const std::vector<std::complex<double>>& roots) {
  json out = json::array();
  for (const auto& z : roots) out.push_back({{"re", z.real()}, {"im", z.imag()}});
  return out;
}

}  // namespace ffc::json_io
