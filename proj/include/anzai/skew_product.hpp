#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anzai/torus_fourier.hpp"
#include "anzai/unimodular.hpp"

namespace anzai {

/// Phi(x, z) = (theta(x), f(x) z) on X_o x T.
struct SkewSystem {
  BaseSystem base;
  CircleCocycle cocycle;
};

/// Throws unless the cocycle matches the base kind, is continuous, and (cyclic) has
/// length N.
SkewSystem make_skew_system(BaseSystem base, CircleCocycle cocycle);

std::pair<BasePoint, complex> apply_skew(const SkewSystem& sys, const BasePoint& x, complex z);

/// f^n as an exact base function. Circle cocycles qualify only without oscillating
/// phase; otherwise NOT_REPRESENTABLE.
BaseFunction cocycle_power_function(const SkewSystem& sys, std::int64_t n);

/// h o Phi, exact: slot n becomes (h_n o theta) * f^n.
TorusObservable koopman(const SkewSystem& sys, const TorusObservable& h,
                        int frequency_cap = kDefaultFrequencyCap);

/// f(theta^{n-1} x) ... f(x); 1 for n = 0.
complex cocycle_product(const SkewSystem& sys, const BasePoint& x, std::int64_t n);

/// Exact (1/N) sum_{k<N} h o Phi^k.
TorusObservable cesaro_average(const SkewSystem& sys, const TorusObservable& h, std::int64_t N,
                               int frequency_cap = kDefaultFrequencyCap);

/// (1/N) sum_{k<N} h(Phi^k(x, z)) along the orbit, compensated summation in order k = 0..N-1.
complex birkhoff_average(const SkewSystem& sys, const TorusObservable& h, const BasePoint& x,
                         complex z, std::int64_t N);

/// The same averages for every N of an increasing schedule, computed in one orbit pass.
std::vector<complex> birkhoff_averages(const SkewSystem& sys, const TorusObservable& h,
                                       const BasePoint& x, complex z,
                                       const std::vector<std::int64_t>& schedule);

enum class DiagnosticStatus { kConverging, kNonConverging };

const char* to_string(DiagnosticStatus s);

struct DiagnosticRow {
  std::int64_t n_prev = 0;
  std::int64_t n = 0;
  double sup_difference = 0.0;
};

struct DiagnosticReport {
  std::vector<DiagnosticRow> rows;
  double threshold = 0.0;
  DiagnosticStatus status = DiagnosticStatus::kNonConverging;
};

struct DiagnosticOptions {
  /// CONVERGING iff the last sup-difference is below scale * (last N)^{-1/2}.
  double threshold_scale = 10.0;
};

/// Sup over the grid (base points x equispaced z nodes) of the change in Birkhoff
/// averages between consecutive schedule entries. Diagnostic only.
DiagnosticReport ue_diagnostic(const SkewSystem& sys, const TorusObservable& h,
                               const std::vector<std::int64_t>& schedule,
                               const std::vector<BasePoint>& xs, int z_size,
                               const DiagnosticOptions& options = {});

}  // namespace anzai
