#include "anzai/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai::json_io {

namespace {

using detail::overloaded;

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorTag::kInput, what); }

// Converts library-level type errors of the JSON layer into INPUT errors.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    input_error(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    if (e.tag() != ErrorTag::kInvalidArgument) throw;
    input_error(std::string(what) + ": " + e.what());
  }
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) input_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<complex> complex_list(const json& j) {
  if (!j.is_array()) input_error("expected an array of complex values");
  std::vector<complex> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(complex_from_json(v));
  return out;
}

json complex_list_json(const std::vector<complex>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    input_error("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) + ": " +
                e.what());
  }
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    input_error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

complex complex_from_json(const json& j) {
  return guarded("complex", [&]() -> complex {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    input_error("complex values are [re, im] pairs or numbers");
  });
}

json to_json(complex c) { return json::array({c.real(), c.imag()}); }

Rational rational_from_json(const json& j) {
  return guarded("rational", [&]() -> Rational {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2) return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      const auto slash = s.find('/');
      std::int64_t num = 0;
      std::int64_t den = 1;
      const char* b = s.data();
      const char* e = s.data() + s.size();
      const char* mid = slash == std::string::npos ? e : s.data() + slash;
      auto r1 = std::from_chars(b, mid, num);
      if (r1.ec != std::errc{} || r1.ptr != mid) input_error("bad rational '" + s + "'");
      if (mid != e) {
        auto r2 = std::from_chars(mid + 1, e, den);
        if (r2.ec != std::errc{} || r2.ptr != e) input_error("bad rational '" + s + "'");
      }
      return Rational(num, den);
    }
    input_error("rationals are integers, [num, den] pairs or \"p/q\" strings");
  });
}

ExactReal exact_from_json(const json& j) {
  return guarded("exact real", [&] {
    ExactReal e;
    if (!j.is_object()) input_error("exact tags are objects");
    if (j.contains("rational")) e.rational = rational_from_json(j["rational"]);
    if (j.contains("irrational")) {
      e.irrational = j["irrational"].get<std::string>();
      if (!named_irrational_value(e.irrational)) input_error("unknown irrational '" + e.irrational + "'");
      e.irrational_coeff = j.contains("irrational_coeff") ? rational_from_json(j["irrational_coeff"])
                                                          : Rational(1);
    } else if (j.contains("irrational_coeff")) {
      input_error("irrational_coeff without an irrational name");
    }
    if (e.irrational_coeff.is_zero()) e.irrational.clear();
    return e;
  });
}

json to_json(const ExactReal& e) {
  json out = {{"rational", {e.rational.num(), e.rational.den()}}};
  if (!e.irrational_coeff.is_zero()) {
    out["irrational_coeff"] = {e.irrational_coeff.num(), e.irrational_coeff.den()};
    out["irrational"] = e.irrational;
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  return guarded("Laurent polynomial", [&] {
    const json& arr = j.is_object() ? require(j, "coeffs") : j;
    if (!arr.is_array()) input_error("coefficients are [[k, [re, im]], ...]");
    LaurentPoly p;
    for (const auto& entry : arr) {
      if (!entry.is_array() || entry.size() != 2) input_error("coefficient entries are [k, value]");
      p.add_to(entry[0].get<int>(), complex_from_json(entry[1]));
    }
    return p;
  });
}

json to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [k, c] : p.coeffs()) arr.push_back(json::array({k, to_json(c)}));
  return {{"coeffs", arr}};
}

BaseSystem base_system_from_json(const json& j) {
  return guarded("system", [&]() -> BaseSystem {
    const auto type = require(j, "type").get<std::string>();
    if (type == "circle") {
      std::optional<ExactReal> exact;
      if (j.contains("alpha_exact")) exact = exact_from_json(j["alpha_exact"]);
      if (j.contains("alpha")) return make_circle_rotation(j["alpha"].get<double>(), exact);
      if (!exact) input_error("circle systems need alpha or alpha_exact");
      return make_circle_rotation(*exact);
    }
    if (type == "zinf") return make_zinf_shift();
    if (type == "cyclic") return make_cyclic_shift(require(j, "n").get<std::int64_t>());
    input_error("unknown system type '" + type + "'");
  });
}

json to_json(const BaseSystem& sys) {
  return std::visit(overloaded{
                        [](const CircleRotation& c) {
                          json out = {{"type", "circle"}, {"alpha", c.alpha}};
                          if (c.alpha_exact) out["alpha_exact"] = to_json(*c.alpha_exact);
                          return out;
                        },
                        [](const ZInfShift&) { return json{{"type", "zinf"}}; },
                        [](const CyclicShift& c) { return json{{"type", "cyclic"}, {"n", c.n}}; },
                    },
                    sys);
}

BasePoint point_from_json(const BaseSystem& sys, const json& j) {
  return guarded("point", [&]() -> BasePoint {
    if (j.is_string()) return point_from_string(sys, j.get<std::string>());
    BasePoint x;
    switch (kind_of(sys)) {
      case BaseKind::kCircle: x = circle_point(j.get<double>()); break;
      case BaseKind::kZInf: x = zinf_point(j.get<std::int64_t>()); break;
      case BaseKind::kCyclic: x = cyclic_point(j.get<std::int64_t>()); break;
    }
    check_point(sys, x);
    return x;
  });
}

BasePoint point_from_string(const BaseSystem& sys, const std::string& s) {
  BasePoint x;
  if (kind_of(sys) == BaseKind::kZInf && s == "inf") {
    x = zinf_infinity();
  } else if (kind_of(sys) == BaseKind::kCircle) {
    double t = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), t);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) input_error("bad circle point '" + s + "'");
    x = circle_point(t);
  } else {
    std::int64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) input_error("bad point '" + s + "'");
    x = kind_of(sys) == BaseKind::kZInf ? zinf_point(v) : cyclic_point(v);
  }
  try {
    check_point(sys, x);
  } catch (const Error& e) {
    input_error(e.what());
  }
  return x;
}

json to_json(const BasePoint& x) {
  return std::visit(overloaded{
                        [](const CirclePoint& p) { return json(p.t); },
                        [](const ZInfPoint& p) { return p.is_infinity() ? json("inf") : json(*p.l); },
                        [](const CyclicPoint& p) { return json(p.r); },
                    },
                    x);
}

BaseFunction base_function_from_json(const BaseSystem& sys, const json& j) {
  return guarded("base function", [&]() -> BaseFunction {
    BaseFunction g;
    switch (kind_of(sys)) {
      case BaseKind::kCircle:
        if (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number())) {
          g = CircleFn{LaurentPoly::constant(complex_from_json(j))};
        } else {
          g = CircleFn{laurent_from_json(j)};
        }
        break;
      case BaseKind::kZInf: {
        if (j.is_number() || j.is_array()) {
          g = ZInfFn{0, {}, complex_from_json(j)};
          break;
        }
        ZInfFn f;
        f.window_start = j.value("window_start", std::int64_t{0});
        if (j.contains("values")) f.values = complex_list(j["values"]);
        f.limit = j.contains("limit") ? complex_from_json(j["limit"]) : complex{};
        g = f;
        break;
      }
      case BaseKind::kCyclic: {
        const json& v = j.is_object() ? require(j, "values") : j;
        g = CyclicFn{complex_list(v)};
        break;
      }
    }
    try {
      check_function(sys, g);
    } catch (const Error& e) {
      input_error(e.what());
    }
    return g;
  });
}

json to_json(const BaseFunction& g) {
  return std::visit(overloaded{
                        [](const CircleFn& f) { return to_json(f.coeffs); },
                        [](const ZInfFn& f) {
                          return json{{"window_start", f.window_start},
                                      {"values", complex_list_json(f.values)},
                                      {"limit", to_json(f.limit)}};
                        },
                        [](const CyclicFn& f) { return json{{"values", complex_list_json(f.values)}}; },
                    },
                    g);
}

UnimodularFunction unimodular_from_json(const BaseSystem& sys, const json& j) {
  return guarded("cocycle", [&]() -> UnimodularFunction {
    switch (kind_of(sys)) {
      case BaseKind::kCircle: {
        std::optional<ExactReal> exact;
        if (j.contains("offset_exact")) exact = exact_from_json(j["offset_exact"]);
        double offset = j.contains("offset") ? j["offset"].get<double>() : (exact ? exact->value() : 0.0);
        LaurentPoly osc = j.contains("oscillation") ? laurent_from_json(j["oscillation"]) : LaurentPoly{};
        return make_circle_cocycle(j.value("winding", std::int64_t{0}), offset, osc, exact);
      }
      case BaseKind::kZInf: {
        if (j.contains("left_tail") || j.contains("right_tail")) {
          ZInfUnimodular u;
          u.window_start = j.value("window_start", std::int64_t{0});
          u.values = complex_list(require(j, "values"));
          u.at_infinity = complex_from_json(require(j, "at_infinity"));
          u.left_tail = j.contains("left_tail") ? complex_from_json(j["left_tail"]) : u.at_infinity;
          u.right_tail = j.contains("right_tail") ? complex_from_json(j["right_tail"]) : u.at_infinity;
          return u;
        }
        const complex limit = j.contains("limit") ? complex_from_json(j["limit"]) : complex{1.0, 0.0};
        return make_zinf_cocycle(j.value("window_start", std::int64_t{0}),
                                 j.contains("values") ? complex_list(j["values"]) : std::vector<complex>{},
                                 limit);
      }
      case BaseKind::kCyclic: {
        const json& v = j.is_object() ? require(j, "values") : j;
        return make_cyclic_cocycle(complex_list(v));
      }
    }
    input_error("unknown system kind");
  });
}

json to_json(const UnimodularFunction& u) {
  return std::visit(overloaded{
                        [](const CircleUnimodular& f) {
                          json out = {{"winding", f.winding}, {"offset", f.offset},
                                      {"oscillation", to_json(f.oscillation)}};
                          if (f.offset_exact) out["offset_exact"] = to_json(*f.offset_exact);
                          return out;
                        },
                        [](const ZInfUnimodular& f) {
                          return json{{"window_start", f.window_start},
                                      {"values", complex_list_json(f.values)},
                                      {"left_tail", to_json(f.left_tail)},
                                      {"right_tail", to_json(f.right_tail)},
                                      {"at_infinity", to_json(f.at_infinity)}};
                        },
                        [](const CyclicUnimodular& f) {
                          return json{{"values", complex_list_json(f.values)}};
                        },
                    },
                    u);
}

SkewSystem skew_system_from_json(const json& j) {
  BaseSystem base = base_system_from_json(require(j, "base"));
  UnimodularFunction cocycle = j.contains("cocycle") ? unimodular_from_json(base, j["cocycle"])
                                                     : trivial_cocycle(base);
  try {
    return make_skew_system(std::move(base), std::move(cocycle));
  } catch (const Error& e) {
    input_error(e.what());
  }
}

json to_json(const SkewSystem& sys) {
  return {{"base", to_json(sys.base)}, {"cocycle", to_json(sys.cocycle)}};
}

TorusObservable observable_from_json(const BaseSystem& sys, const json& j) {
  return guarded("observable", [&] {
    const json& arr = j.is_object() ? require(j, "slots") : j;
    if (!arr.is_array()) input_error("observable slots are [[n, fn], ...]");
    TorusObservable h(kind_of(sys));
    for (const auto& entry : arr) {
      if (!entry.is_array() || entry.size() != 2) input_error("slot entries are [n, fn]");
      h.add_to(entry[0].get<int>(), base_function_from_json(sys, entry[1]));
    }
    return h;
  });
}

json to_json(const TorusObservable& h) {
  json arr = json::array();
  for (const auto& [n, g] : h.slots()) arr.push_back(json::array({n, to_json(g)}));
  return {{"slots", arr}};
}

ExpectationMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const int k = require(j, "k").get<int>();
    try {
      return ExpectationMatrix::make(k, complex_list(require(j, "entries")));
    } catch (const Error& e) {
      if (e.tag() == ErrorTag::kInput) throw;
      input_error(e.what());
    }
  });
}

json to_json(const ExpectationMatrix& A) {
  return {{"k", A.k()}, {"entries", complex_list_json(A.entries())}};
}

json to_json(const CohomologySolution& s) {
  json out = {{"level", s.level}, {"kind", to_string(s.kind)}, {"notes", s.notes}};
  out["witness"] = s.witness ? to_json(*s.witness) : json(nullptr);
  return out;
}

json to_json(const CohomologyReport& r) {
  return {{"n_o", r.n_o},
          {"m_o", r.m_o},
          {"k_o", r.k_o},
          {"classification", to_string(r.classification)},
          {"n_max", r.n_max},
          {"u", to_json(r.u)},
          {"v", to_json(r.v)},
          {"notes", r.notes}};
}

json to_json(const A1Element& a) {
  return {{"n_o", a.n_o}, {"generator", to_json(a.u)}, {"coeffs", to_json(a.coeffs)["coeffs"]}};
}

json to_json(const FixedPointElement& e) {
  return {{"m_o", e.m_o},
          {"generator", to_json(e.v)},
          {"coeffs", to_json(e.coeffs)["coeffs"]},
          {"notes", e.notes}};
}

json to_json(const AnalyticFactor& f) {
  return {{"degree", f.degree},
          {"coeffs", complex_list_json(f.coeffs)},
          {"roots", complex_list_json(f.roots)},
          {"residual", f.residual}};
}

json to_json(const ParametricFactorTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"x", to_json(r.x)},
                    {"stratum", r.stratum},
                    {"factor", to_json(r.factor)},
                    {"coefficient_bound_ok", r.coefficient_bound_ok},
                    {"sup_bound_ok", r.sup_bound_ok}});
  }
  return {{"degree", t.degree}, {"sup_p", t.sup_p}, {"max_residual", t.max_residual}, {"rows", rows}};
}

json to_json(const DiagnosticReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n_prev", row.n_prev}, {"n", row.n}, {"sup_difference", row.sup_difference}});
  }
  return {{"rows", rows}, {"threshold", r.threshold}, {"status", to_string(r.status)}};
}

json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"axiom", c.axiom}, {"worst", c.worst}, {"tol", c.tol}, {"passed", c.passed}});
  }
  return {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

json to_json(const GoldenReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"identity", c.identity}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"cohomology", to_json(r.cohomology)},
          {"failures", r.failures()},
          {"passed", r.passed()},
          {"checks", checks}};
}

}  // namespace anzai::json_io
