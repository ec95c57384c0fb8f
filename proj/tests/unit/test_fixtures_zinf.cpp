#include <doctest.h>

#include <chrono>

#include "anzai/fixtures_zinf.hpp"

using namespace anzai;

TEST_CASE("golden suite passes on the fixture") {
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_golden_suite();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.identity << ": " << c.detail);
  CHECK(report.failures() == 0);
  CHECK(report.checks.size() >= 14);
  CHECK(seconds < 1.0);
}

TEST_CASE("golden suite is deterministic in the seed") {
  const auto a = run_golden_suite(1e-12, 7);
  const auto b = run_golden_suite(1e-12, 7);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
}

TEST_CASE("a perturbed cocycle is caught") {
  const auto trivial = make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {1.0}, 1.0));
  const auto report = run_golden_suite(trivial, 1e-12, 0);
  CHECK(report.cohomology.m_o == 1);
  CHECK(report.failures() > 0);
  bool saw_levels = false;
  for (const auto& c : report.checks) {
    if (c.identity == "(n_o, m_o, k_o) = (1, 2, 2)") {
      saw_levels = true;
      CHECK_FALSE(c.passed);
      CHECK(c.detail == "got (1, 1, 1)");
    }
  }
  CHECK(saw_levels);
}
