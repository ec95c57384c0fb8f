#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anzai/skew_product.hpp"

namespace anzai {

enum class SolutionKind { kContinuous, kMeasurableOnly, kNone };

const char* to_string(SolutionKind kind);

/// A solution of g(theta x) f(x)^n = g(x) at level n, normalized to 1 at the reference
/// point. For MEASURABLE_ONLY solutions on Z_inf the witness is the back-substituted
/// value pattern; only its value at infinity is determined by the measure class.
struct CohomologySolution {
  int level = 0;
  SolutionKind kind = SolutionKind::kNone;
  std::optional<UnimodularFunction> witness;
  std::vector<std::string> notes;

  bool solvable() const { return kind != SolutionKind::kNone; }
};

enum class ErgodicClass {
  kUniquelyErgodic,             // n_o = 0
  kUniquelyErgodicFixedPoint,   // k_o = 1
  kTopologicallyErgodicNotUe,   // k_o = 0, n_o > 0
  kNonUnique,                   // k_o >= 2
};

const char* to_string(ErgodicClass c);

struct CohomologyReport {
  int n_o = 0;
  int m_o = 0;
  int k_o = 0;
  CohomologySolution u;  // level n_o (measurable generator)
  CohomologySolution v;  // level m_o (continuous generator)
  ErgodicClass classification = ErgodicClass::kUniquelyErgodic;
  int n_max = 0;
  std::vector<std::string> notes;
};

/// Continuous solutions only: returns kContinuous or kNone. Circle bases decide the
/// arithmetic condition on exact tags and throw INEXACT when a tag is missing.
CohomologySolution solve_continuous(const SkewSystem& sys, int n);

/// mu_o-a.e. solutions; kContinuous when a continuous representative exists.
CohomologySolution solve_measurable(const SkewSystem& sys, int n);

/// Bounded search over levels 1..n_max for the generators n_o and m_o.
CohomologyReport compute_report(const SkewSystem& sys, int n_max);

/// sup over `grid` of |g(theta x) f(x)^n - g(x)|.
double equation_residual(const SkewSystem& sys, const UnimodularFunction& g, int n,
                         const std::vector<BasePoint>& grid);

/// Points used by the report's internal checks: 64 circle points, l in [-64, 64] plus
/// infinity, or every residue.
std::vector<BasePoint> default_check_grid(const BaseSystem& sys);

}  // namespace anzai
