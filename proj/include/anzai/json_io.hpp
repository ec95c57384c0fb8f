#pragma once

#include <json.hpp>
#include <string>

#include "anzai/cohomology.hpp"
#include "anzai/expectations.hpp"
#include "anzai/fixtures_zinf.hpp"
#include "anzai/skew_product.hpp"
#include "anzai/spectral_factorization.hpp"

/// JSON forms of the library types. Complex numbers are [re, im] pairs (a bare number
/// is accepted as input); every parse failure is reported as an INPUT error.
namespace anzai::json_io {

using json = nlohmann::json;

/// Parses a file; syntax errors carry the byte position.
json load_file(const std::string& path);
json parse_text(const std::string& text);

complex complex_from_json(const json& j);
json to_json(complex c);

Rational rational_from_json(const json& j);
ExactReal exact_from_json(const json& j);
json to_json(const ExactReal& e);

LaurentPoly laurent_from_json(const json& j);
json to_json(const LaurentPoly& p);

/// {"type": "circle", "alpha": a, "alpha_exact": {...}} | {"type": "zinf"} |
/// {"type": "cyclic", "n": N}
BaseSystem base_system_from_json(const json& j);
json to_json(const BaseSystem& sys);

/// "inf", an integer, or a circle angle; checked against the system.
BasePoint point_from_json(const BaseSystem& sys, const json& j);
BasePoint point_from_string(const BaseSystem& sys, const std::string& s);
json to_json(const BasePoint& x);

BaseFunction base_function_from_json(const BaseSystem& sys, const json& j);
json to_json(const BaseFunction& g);

UnimodularFunction unimodular_from_json(const BaseSystem& sys, const json& j);
json to_json(const UnimodularFunction& u);

/// {"base": ..., "cocycle": ...}
SkewSystem skew_system_from_json(const json& j);
json to_json(const SkewSystem& sys);

/// {"slots": [[n, fn], ...]} or the bare slot array.
TorusObservable observable_from_json(const BaseSystem& sys, const json& j);
json to_json(const TorusObservable& h);

/// {"k": k, "entries": [[re, im], ...]} row-major.
ExpectationMatrix matrix_from_json(const json& j);
json to_json(const ExpectationMatrix& A);

json to_json(const CohomologySolution& s);
json to_json(const CohomologyReport& r);
json to_json(const A1Element& a);
json to_json(const FixedPointElement& e);
json to_json(const AnalyticFactor& f);
json to_json(const ParametricFactorTable& t);
json to_json(const DiagnosticReport& r);
json to_json(const AxiomReport& r);
json to_json(const GoldenReport& r);

}  // namespace anzai::json_io
