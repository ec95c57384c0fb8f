#pragma once

#include <string>
#include <vector>

#include "anzai/cohomology.hpp"
#include "anzai/skew_product.hpp"

namespace anzai {

/// Shift on Z u {inf} with the flip cocycle f(0) = -1, f = 1 elsewhere and at infinity.
struct ZInfFixture {
  SkewSystem sys;
  int expected_n_o = 1;
  int expected_m_o = 2;
  int expected_k_o = 2;
};

ZInfFixture build_fixture();

struct GoldenCheck {
  std::string identity;
  bool passed = false;
  std::string detail;
};

struct GoldenReport {
  CohomologyReport cohomology;
  std::vector<GoldenCheck> checks;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs every identity of the worked example on the fixture. `tol` bounds
/// floating-point comparisons that involve summation in a different order.
GoldenReport run_golden_suite(double tol = 1e-12, unsigned seed = 0);

/// The same identities against an arbitrary Z_inf system, still expecting the
/// fixture's constants. A perturbed cocycle shows up as named mismatches.
GoldenReport run_golden_suite(const SkewSystem& sys, double tol = 1e-12, unsigned seed = 0);

}  // namespace anzai
