#include "anzai/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "anzai/detail/format.hpp"
#include "anzai/error.hpp"
#include "anzai/fixtures_zinf.hpp"
#include "anzai/sampling.hpp"

namespace anzai::cli {

namespace {

using detail::format_double;
namespace jio = json_io;

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorTag::kInput, what); }

std::vector<BasePoint> parse_points(const BaseSystem& sys, const std::vector<std::string>& points) {
  std::vector<BasePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(jio::point_from_string(sys, p));
  return out;
}

/// Default base grid for averages and diagnostics. The Z_inf grid includes points at
/// orbit scale, where averages along the two tails differ.
std::vector<BasePoint> default_points(const BaseSystem& sys, std::int64_t horizon) {
  std::vector<BasePoint> out;
  switch (kind_of(sys)) {
    case BaseKind::kCircle:
      for (int j = 0; j < 8; ++j) out.push_back(circle_point(j / 8.0));
      break;
    case BaseKind::kZInf:
      out = {zinf_infinity(), zinf_point(0), zinf_point(-horizon / 2), zinf_point(-horizon)};
      break;
    case BaseKind::kCyclic:
      for (std::int64_t r = 0; r < std::get<CyclicShift>(sys).n; ++r) out.push_back(cyclic_point(r));
      break;
  }
  return out;
}

/// Small grid for positivity checks.
std::vector<BasePoint> positivity_points(const BaseSystem& sys) {
  std::vector<BasePoint> out;
  switch (kind_of(sys)) {
    case BaseKind::kCircle:
      for (int j = 0; j < 16; ++j) out.push_back(circle_point(j / 16.0));
      break;
    case BaseKind::kZInf:
      out.push_back(zinf_infinity());
      for (int l = -6; l <= 6; ++l) out.push_back(zinf_point(l));
      break;
    case BaseKind::kCyclic:
      for (std::int64_t r = 0; r < std::get<CyclicShift>(sys).n; ++r) out.push_back(cyclic_point(r));
      break;
  }
  return out;
}

int exit_code_for(ErrorTag tag) {
  switch (tag) {
    case ErrorTag::kRootOnCircle:
    case ErrorTag::kRootCount:
    case ErrorTag::kFrequencyCap:
    case ErrorTag::kNotRepresentable:
      return kExitAssertion;
    default:
      return kExitInput;
  }
}

json require_file(const std::string& path, const char* flag) {
  if (path.empty()) input_error(std::string("missing ") + flag);
  return jio::load_file(path);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) input_error("--tol must be positive");
  if (cfg.grid < 1 || cfg.zgrid < 1) input_error("grid sizes must be positive");
  if (cfg.n_max < 1) input_error("--n-max must be >= 1");
  if (cfg.samples < 1) input_error("--samples must be >= 1");
  for (std::size_t i = 0; i < cfg.schedule.size(); ++i) {
    if (cfg.schedule[i] < 1 || (i > 0 && cfg.schedule[i] <= cfg.schedule[i - 1])) {
      input_error("--schedule must be strictly increasing and positive");
    }
  }
}

json report_command(const json& system, int n_max) {
  const auto sys = jio::skew_system_from_json(system);
  return jio::to_json(compute_report(sys, n_max));
}

json expect_command(const json& system, const json& observable, const std::optional<json>& matrix,
                    int n_max) {
  const auto sys = jio::skew_system_from_json(system);
  const auto h = jio::observable_from_json(sys.base, observable);
  const auto report = compute_report(sys, n_max);
  json out = {{"report", jio::to_json(report)}};
  if (matrix) {
    const auto A = jio::matrix_from_json(*matrix);
    out["expectation"] = "E_A";
    out["matrix"] = jio::to_json(A);
    out["result"] = jio::to_json(e_a(sys, report, A, h));
  } else {
    out["expectation"] = "E_can";
    out["result"] = jio::to_json(canonical_expectation(sys, report, h));
  }
  return out;
}

json factorize_command(const json& input, double tol, int grid) {
  if (input.is_object() && input.contains("system")) {
    const auto sys = jio::base_system_from_json(input.at("system"));
    ParametricTrigPoly p;
    const json& coeffs = input.at("coeffs");
    if (!coeffs.is_array()) input_error("parametric coefficients are [[k, fn], ...]");
    for (const auto& entry : coeffs) {
      if (!entry.is_array() || entry.size() != 2) input_error("coefficient entries are [k, fn]");
      p.coeffs.insert_or_assign(entry[0].get<int>(), jio::base_function_from_json(sys, entry[1]));
    }
    std::vector<BasePoint> xs;
    for (const auto& x : input.at("grid")) xs.push_back(jio::point_from_json(sys, x));
    const auto table = fejer_riesz_parametric(sys, p, xs, tol, grid);
    json out = jio::to_json(table);
    bool ok = true;
    for (const auto& r : table.rows) ok = ok && r.coefficient_bound_ok && r.sup_bound_ok;
    out["passed"] = ok;
    return out;
  }
  const auto q = jio::laurent_from_json(input);
  json out = jio::to_json(fejer_riesz_scalar(q, tol, grid));
  out["grid"] = grid;
  return out;
}

json verify_ce_command(const json& system, const std::optional<json>& matrix, unsigned seed,
                       int samples, int n_max, int zgrid) {
  const auto sys = jio::skew_system_from_json(system);
  const auto report = compute_report(sys, n_max);
  Rng rng(seed);
  AxiomSamples s;
  for (int i = 0; i < samples; ++i) s.h.push_back(random_observable(sys.base, rng, 3));
  for (int i = 0; i < samples; ++i) s.p.push_back(random_analytic_observable(sys.base, rng, 3));
  s.xs = positivity_points(sys.base);
  s.z_size = zgrid;

  std::vector<ExpectationUnderTest> suites;
  for (int n : {1, 2, 3, 5}) suites.push_back(periodic_under_test(sys.base, n));
  suites.push_back(canonical_under_test(sys, report));
  json matrix_json = nullptr;
  if (report.m_o >= 1) {
    const auto A = matrix ? jio::matrix_from_json(*matrix) : random_expectation_matrix(report.k_o, rng);
    matrix_json = jio::to_json(A);
    suites.push_back(e_a_under_test(sys, report, A));
    if (report.m_o >= 2) suites.push_back(convex_complement_under_test(sys, report, A));
  }

  json out = {{"seed", seed}, {"samples", samples}, {"report", jio::to_json(report)},
              {"matrix", matrix_json}};
  json results = json::array();
  bool ok = true;
  for (const auto& E : suites) {
    const auto r = ce_axiom_suite(sys.base, E, s);
    ok = ok && r.passed();
    results.push_back(jio::to_json(r));
  }
  out["suites"] = results;
  out["passed"] = ok;
  return out;
}

json dominate_command(const json& system, const json& observable, const json& matrix, bool square,
                      const std::vector<std::string>& points, int zgrid, double tol, int n_max) {
  const auto sys = jio::skew_system_from_json(system);
  auto h = jio::observable_from_json(sys.base, observable);
  if (square) h = abs_squared(h);
  const auto A = jio::matrix_from_json(matrix);
  const auto report = compute_report(sys, n_max);
  const auto xs = points.empty() ? positivity_points(sys.base) : parse_points(sys.base, points);
  const auto r = check_domination(sys, report, A, h, xs, zgrid, tol);
  return {{"m_o", report.m_o}, {"min_value", r.min_value}, {"tol", tol}, {"passed", r.passed}};
}

json absorb_command(const json& system, const json& observable, double tol, int n_max) {
  const auto sys = jio::skew_system_from_json(system);
  const auto h = jio::observable_from_json(sys.base, observable);
  const auto report = compute_report(sys, n_max);
  const double residual = check_absorption(sys, report, h);
  return {{"m_o", report.m_o}, {"residual", residual}, {"tol", tol}, {"passed", residual <= tol}};
}

json example_zinf_command(unsigned seed, double tol) {
  json out = jio::to_json(run_golden_suite(tol, seed));
  out["seed"] = seed;
  return out;
}

json diagnose_command(const json& system, const json& observable,
                      const std::vector<std::int64_t>& schedule,
                      const std::vector<std::string>& points, int zgrid) {
  const auto sys = jio::skew_system_from_json(system);
  const auto h = jio::observable_from_json(sys.base, observable);
  const auto sched = schedule.empty() ? std::vector<std::int64_t>{1000, 10000} : schedule;
  const auto xs = points.empty() ? default_points(sys.base, sched.back()) : parse_points(sys.base, points);
  return jio::to_json(ue_diagnostic(sys, h, sched, xs, zgrid));
}

std::string average_csv(const json& system, const json& observable,
                        const std::vector<std::int64_t>& schedule,
                        const std::vector<std::string>& points, int zgrid, bool cesaro) {
  const auto sys = jio::skew_system_from_json(system);
  const auto h = jio::observable_from_json(sys.base, observable);
  const auto sched = schedule.empty() ? std::vector<std::int64_t>{10, 100, 1000} : schedule;
  const auto xs = points.empty() ? default_points(sys.base, sched.back()) : parse_points(sys.base, points);

  std::vector<TorusObservable> exact;
  if (cesaro) {
    for (auto n : sched) exact.push_back(cesaro_average(sys, h, n));
  }
  std::ostringstream os;
  os << "x_index,x,z_index,z_re,z_im,N,birkhoff_re,birkhoff_im";
  if (cesaro) os << ",cesaro_re,cesaro_im";
  os << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int j = 0; j < zgrid; ++j) {
      const complex z = z_node(j, zgrid);
      const auto avg = birkhoff_averages(sys, h, xs[i], z, sched);
      for (std::size_t s = 0; s < sched.size(); ++s) {
        os << i << ',' << format_point(xs[i]) << ',' << j << ',' << format_double(z.real()) << ','
           << format_double(z.imag()) << ',' << sched[s] << ',' << format_double(avg[s].real())
           << ',' << format_double(avg[s].imag());
        if (cesaro) {
          const complex c = evaluate_torus(sys.base, exact[s], xs[i], z);
          os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::string text;
    bool passed = true;
    const auto& c = cfg.subcommand;
    auto emit_json = [&](const json& j) {
      text = j.dump(2) + "\n";
      if (j.contains("passed")) passed = j.at("passed").get<bool>();
    };
    auto optional_file = [](const std::string& path) -> std::optional<json> {
      if (path.empty()) return std::nullopt;
      return json_io::load_file(path);
    };

    if (c == "report") {
      emit_json(report_command(require_file(cfg.system_path, "--system"), cfg.n_max));
    } else if (c == "average") {
      text = average_csv(require_file(cfg.system_path, "--system"),
                         require_file(cfg.observable_path, "--observable"), cfg.schedule, cfg.points,
                         cfg.zgrid, cfg.cesaro);
    } else if (c == "diagnose") {
      const auto r = diagnose_command(require_file(cfg.system_path, "--system"),
                                      require_file(cfg.observable_path, "--observable"),
                                      cfg.schedule, cfg.points, cfg.zgrid);
      std::ostringstream os;
      os << "n_prev,n,sup_difference,threshold,status\n";
      for (const auto& row : r.at("rows")) {
        os << row.at("n_prev").get<std::int64_t>() << ',' << row.at("n").get<std::int64_t>() << ','
           << format_double(row.at("sup_difference").get<double>()) << ','
           << format_double(r.at("threshold").get<double>()) << ','
           << r.at("status").get<std::string>() << '\n';
      }
      text = os.str();
    } else if (c == "factorize") {
      emit_json(factorize_command(require_file(cfg.input_path, "--input"), cfg.tol, cfg.grid));
    } else if (c == "expect") {
      emit_json(expect_command(require_file(cfg.system_path, "--system"),
                               require_file(cfg.observable_path, "--observable"),
                               optional_file(cfg.matrix_path), cfg.n_max));
    } else if (c == "verify-ce") {
      emit_json(verify_ce_command(require_file(cfg.system_path, "--system"),
                                  optional_file(cfg.matrix_path), cfg.seed, cfg.samples, cfg.n_max,
                                  cfg.zgrid));
    } else if (c == "dominate") {
      emit_json(dominate_command(require_file(cfg.system_path, "--system"),
                                 require_file(cfg.observable_path, "--observable"),
                                 require_file(cfg.matrix_path, "--matrix"), cfg.square, cfg.points,
                                 cfg.zgrid, cfg.tol, cfg.n_max));
    } else if (c == "absorb") {
      emit_json(absorb_command(require_file(cfg.system_path, "--system"),
                               require_file(cfg.observable_path, "--observable"), cfg.tol,
                               cfg.n_max));
    } else if (c == "example-zinf") {
      emit_json(example_zinf_command(cfg.seed, 1e-12));
    } else {
      input_error("unknown subcommand '" + c + "'");
    }

    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) input_error("cannot write '" + cfg.out_path + "'");
      f << text;
    }
    return passed ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.tag());
  } catch (const json::exception& e) {
    err << "error: INPUT: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace anzai::cli
