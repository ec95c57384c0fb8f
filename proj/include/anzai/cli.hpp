#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anzai/json_io.hpp"

namespace anzai::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
  std::string subcommand;
  std::string system_path;
  std::string observable_path;
  std::string input_path;
  std::string matrix_path;
  std::string out_path;  // stdout when empty
  double tol = 1e-9;
  int grid = 4096;  // circle nodes for factorization checks
  int zgrid = 16;   // fiber nodes for averages, diagnostics and positivity
  std::vector<std::int64_t> schedule;
  std::vector<std::string> points;
  unsigned seed = 0;
  int n_max = 8;
  int samples = 50;
  bool cesaro = false;  // `average`: add exact Cesaro values
  bool square = false;  // `dominate`: the observable is p, tested as |p|^2
};

/// Throws INPUT unless tolerances are positive, grids nonempty and the schedule
/// strictly increasing.
void validate(const RunConfig& cfg);

/// Runs one subcommand, writing its artifact to cfg.out_path or `out` and diagnostics to
/// `err`. Returns 0 on success, 1 when an assertion or numeric check fails, 2 on input
/// errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Command bodies on parsed JSON, shared with the Python bindings.

json report_command(const json& system, int n_max);
json expect_command(const json& system, const json& observable, const std::optional<json>& matrix,
                    int n_max);
json factorize_command(const json& input, double tol, int grid);
json verify_ce_command(const json& system, const std::optional<json>& matrix, unsigned seed,
                       int samples, int n_max, int zgrid);
json dominate_command(const json& system, const json& observable, const json& matrix, bool square,
                      const std::vector<std::string>& points, int zgrid, double tol, int n_max);
json absorb_command(const json& system, const json& observable, double tol, int n_max);
json example_zinf_command(unsigned seed, double tol);
json diagnose_command(const json& system, const json& observable,
                      const std::vector<std::int64_t>& schedule,
                      const std::vector<std::string>& points, int zgrid);
/// CSV with columns x_index,x,z_index,z_re,z_im,N,birkhoff_re,birkhoff_im and, when
/// `cesaro` is set, cesaro_re,cesaro_im.
std::string average_csv(const json& system, const json& observable,
                        const std::vector<std::int64_t>& schedule,
                        const std::vector<std::string>& points, int zgrid, bool cesaro);

}  // namespace anzai::cli
