#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anzai/cli.hpp"
#include "anzai/error.hpp"

namespace py = pybind11;
using anzai::cli::json;

namespace {

json parse(const std::string& text) { return anzai::json_io::parse_text(text); }

std::optional<json> parse_optional(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse(*text);
}

}  // namespace

PYBIND11_MODULE(_anzai, m) {
  m.doc() = "Skew-product cohomology, expectations and spectral factorization (JSON in, JSON out)";

  py::register_exception<anzai::Error>(m, "Error", PyExc_ValueError);

  m.def(
      "report", [](const std::string& system, int n_max) {
        return anzai::cli::report_command(parse(system), n_max).dump();
      },
      py::arg("system"), py::arg("n_max") = 8);
  m.def(
      "expect",
      [](const std::string& system, const std::string& observable,
         const std::optional<std::string>& matrix, int n_max) {
        return anzai::cli::expect_command(parse(system), parse(observable), parse_optional(matrix),
                                          n_max)
            .dump();
      },
      py::arg("system"), py::arg("observable"), py::arg("matrix") = py::none(), py::arg("n_max") = 8);
  m.def(
      "factorize", [](const std::string& input, double tol, int grid) {
        return anzai::cli::factorize_command(parse(input), tol, grid).dump();
      },
      py::arg("input"), py::arg("tol") = 1e-9, py::arg("grid") = 4096);
  m.def(
      "verify_ce",
      [](const std::string& system, const std::optional<std::string>& matrix, unsigned seed,
         int samples, int n_max, int zgrid) {
        return anzai::cli::verify_ce_command(parse(system), parse_optional(matrix), seed, samples,
                                             n_max, zgrid)
            .dump();
      },
      py::arg("system"), py::arg("matrix") = py::none(), py::arg("seed") = 0, py::arg("samples") = 50,
      py::arg("n_max") = 8, py::arg("zgrid") = 16);
  m.def(
      "dominate",
      [](const std::string& system, const std::string& observable, const std::string& matrix,
         bool square, const std::vector<std::string>& points, int zgrid, double tol, int n_max) {
        return anzai::cli::dominate_command(parse(system), parse(observable), parse(matrix), square,
                                            points, zgrid, tol, n_max)
            .dump();
      },
      py::arg("system"), py::arg("observable"), py::arg("matrix"), py::arg("square") = false,
      py::arg("points") = std::vector<std::string>{}, py::arg("zgrid") = 16, py::arg("tol") = 1e-9,
      py::arg("n_max") = 8);
  m.def(
      "absorb",
      [](const std::string& system, const std::string& observable, double tol, int n_max) {
        return anzai::cli::absorb_command(parse(system), parse(observable), tol, n_max).dump();
      },
      py::arg("system"), py::arg("observable"), py::arg("tol") = 1e-9, py::arg("n_max") = 8);
  m.def(
      "example_zinf",
      [](unsigned seed, double tol) { return anzai::cli::example_zinf_command(seed, tol).dump(); },
      py::arg("seed") = 0, py::arg("tol") = 1e-12);
  m.def(
      "diagnose",
      [](const std::string& system, const std::string& observable,
         const std::vector<std::int64_t>& schedule, const std::vector<std::string>& points,
         int zgrid) {
        return anzai::cli::diagnose_command(parse(system), parse(observable), schedule, points, zgrid)
            .dump();
      },
      py::arg("system"), py::arg("observable"), py::arg("schedule") = std::vector<std::int64_t>{},
      py::arg("points") = std::vector<std::string>{}, py::arg("zgrid") = 16);
  m.def(
      "average_csv",
      [](const std::string& system, const std::string& observable,
         const std::vector<std::int64_t>& schedule, const std::vector<std::string>& points,
         int zgrid, bool cesaro) {
        return anzai::cli::average_csv(parse(system), parse(observable), schedule, points, zgrid,
                                       cesaro);
      },
      py::arg("system"), py::arg("observable"), py::arg("schedule") = std::vector<std::int64_t>{},
      py::arg("points") = std::vector<std::string>{}, py::arg("zgrid") = 16, py::arg("cesaro") = false);
}
