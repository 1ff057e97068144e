#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "ffc/divisibility.hpp"
#include "ffc/freeprob.hpp"
#include "ffc/matrix_oracle.hpp"
#include "ffc/polynomial.hpp"
#include "ffc/transforms.hpp"
#include "ffc/var_poly.hpp"
#include "json.hpp"

namespace ffc::json_io {

using nlohmann::json;

/// Parses text as JSON; syntax errors become Error(malformed).
json parse(std::string_view text);

json rationals(const std::vector<Rational>& v);
/// Entries may be "p/q" strings or JSON integers.
std::vector<Rational> rationals_from(const json& j);

/// {"degree": d, "a": ["1", ...]}.
json to_json(const MonicPoly& p);
/// Accepts {"a": [...]}, {"coefficients": [...]} (ordinary, highest power
/// first) or {"roots": [...]}. A "degree" field, if present, must agree.
MonicPoly poly_from_json(const json& j);

/// {"d": d, "variant": "standard"|"rescaled", "kappa": [...]}.
json to_json(const CumulantVector& k);
CumulantVector cumulants_from_json(const json& j);

/// {"degree": d or null, "m": [...]}.
json to_json(const MomentSequence& m);
MomentSequence moments_from_json(const json& j);

/// {"var": "t", "coeffs": [...] ascending, "text": "t^2 - t"}.
json to_json(const VarPoly& p, std::string_view var = "t");

json to_json(const FreeCumulantVector& r);
json to_json(const ConvergenceReport& r);
json to_json(const divisibility::IDReport& r);
json to_json(const divisibility::CramerResult& r);
json to_json(const matrix_oracle::MCEstimate& e);
json to_json(const std::vector<std::complex<double>>& roots);

}  // namespace ffc::json_io
