#include <doctest.h>

#include <cmath>

#include "anzai/cohomology.hpp"
#include "anzai/error.hpp"
#include "anzai/sampling.hpp"

using namespace anzai;

namespace {

const ExactReal kGolden{Rational(0), Rational(1), "golden"};

SkewSystem flip_system() {
  return make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {-1.0}, 1.0));
}

SkewSystem circle_system(std::int64_t winding, double offset = 0.0, LaurentPoly osc = {},
                         std::optional<ExactReal> offset_exact = std::nullopt) {
  return make_skew_system(make_circle_rotation(kGolden),
                          make_circle_cocycle(winding, offset, std::move(osc), offset_exact));
}

void check_koopman_fixed(const SkewSystem& sys, const CohomologySolution& s) {
  REQUIRE(s.witness);
  const auto g = to_base_function(*s.witness);
  REQUIRE(g);
  const auto h = monomial(sys.base, *g, s.level);
  CHECK(observable_distance(koopman(sys, h), h) < 1e-12);
}

}  // namespace

TEST_CASE("flip system levels") {
  const auto sys = flip_system();
  const auto grid = default_check_grid(sys.base);

  const auto c2 = solve_continuous(sys, 2);
  CHECK(c2.kind == SolutionKind::kContinuous);
  CHECK(equation_residual(sys, *c2.witness, 2, grid) == 0.0);
  check_koopman_fixed(sys, c2);

  const auto c1 = solve_continuous(sys, 1);
  CHECK(c1.kind == SolutionKind::kNone);
  CHECK_FALSE(c1.witness);

  const auto m1 = solve_measurable(sys, 1);
  CHECK(m1.kind == SolutionKind::kMeasurableOnly);
  CHECK(evaluate(sys.base, *m1.witness, zinf_infinity()) == complex{1.0, 0.0});
  CHECK(equation_residual(sys, *m1.witness, 1, grid) == 0.0);
  CHECK_FALSE(is_continuous(*m1.witness));

  const auto c0 = solve_continuous(sys, 0);
  CHECK(c0.kind == SolutionKind::kContinuous);
  CHECK(evaluate(sys.base, *c0.witness, zinf_point(5)) == complex{1.0, 0.0});
}

TEST_CASE("Z_inf cocycle whose limit is not a root of unity at level n") {
  const auto sys = make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {}, complex{0.0, 1.0}));
  CHECK(solve_measurable(sys, 1).kind == SolutionKind::kNone);
  CHECK(solve_measurable(sys, 2).kind == SolutionKind::kNone);
  CHECK(solve_measurable(sys, 4).kind == SolutionKind::kContinuous);
  const auto r = compute_report(sys, 8);
  CHECK(r.n_o == 4);
  CHECK(r.m_o == 4);
  CHECK(r.classification == ErgodicClass::kUniquelyErgodicFixedPoint);
}

TEST_CASE("flip system report") {
  const auto r = compute_report(flip_system(), 8);
  CHECK(r.n_o == 1);
  CHECK(r.m_o == 2);
  CHECK(r.k_o == 2);
  CHECK(r.classification == ErgodicClass::kNonUnique);
  CHECK_THROWS_AS(compute_report(flip_system(), 0), Error);
}

TEST_CASE("trivial circle cocycle is a product system") {
  const auto r = compute_report(circle_system(0), 4);
  CHECK(r.n_o == 1);
  CHECK(r.m_o == 1);
  CHECK(r.k_o == 1);
  CHECK(r.classification == ErgodicClass::kUniquelyErgodicFixedPoint);
}

TEST_CASE("winding one over the golden rotation") {
  const auto sys = circle_system(1);
  const auto r = compute_report(sys, 8);
  CHECK(r.n_o == 0);
  CHECK(r.classification == ErgodicClass::kUniquelyErgodic);
  CHECK(solve_measurable(sys, 1).kind == SolutionKind::kNone);

  // Oracle: averages of the cocycle products decay at every level up to 8.
  for (int n = 1; n <= 8; ++n) {
    const auto avg = birkhoff_averages(sys, character(sys.base, n), circle_point(0.0), 1.0, {20000});
    CHECK(std::abs(avg[0]) < 0.01);
  }
}

TEST_CASE("circle phase polynomial coboundary") {
  const LaurentPoly phi({{-1, {0.05, -0.02}}, {1, {0.05, 0.02}}, {-2, 0.03}, {2, 0.03}});
  const auto sys = circle_system(0, 0.0, phi);
  const auto grid = default_check_grid(sys.base);
  for (int n : {1, 2, -3}) {
    const auto s = solve_continuous(sys, n);
    REQUIRE(s.kind == SolutionKind::kContinuous);
    CHECK(equation_residual(sys, *s.witness, n, grid) < 1e-12);
    CHECK(std::abs(evaluate(sys.base, *s.witness, circle_point(0.0)) - 1.0) < 1e-14);
  }
  const auto r = compute_report(sys, 4);
  CHECK(r.k_o == 1);
  CHECK(r.notes.back() == "higher-level witnesses are powers of the generators");
}

TEST_CASE("circle constant phase resonance") {
  // c = 1/2: levels with n/2 integer solve with d = 0.
  const auto half = circle_system(0, 0.5, {}, ExactReal{Rational(1, 2)});
  auto r = compute_report(half, 6);
  CHECK(r.n_o == 2);
  CHECK(r.m_o == 2);

  // c = alpha: g(t) = exp(-2 pi i t) solves level 1.
  const auto alpha_phase = circle_system(0, kGolden.value(), {}, kGolden);
  const auto s = solve_continuous(alpha_phase, 1);
  REQUIRE(s.kind == SolutionKind::kContinuous);
  CHECK(std::get<CircleUnimodular>(*s.witness).winding == -1);
  CHECK(equation_residual(alpha_phase, *s.witness, 1, default_check_grid(alpha_phase.base)) < 1e-12);

  // c = alpha / 2 first resonates at level 2.
  const ExactReal half_alpha{Rational(0), Rational(1, 2), "golden"};
  r = compute_report(circle_system(0, half_alpha.value(), {}, half_alpha), 6);
  CHECK(r.n_o == 2);

  // Offsets without tags cannot be decided.
  CHECK_THROWS_AS(solve_continuous(circle_system(0, 0.3), 1), Error);
  // Mixed irrationals cannot be decided either.
  const ExactReal root2{Rational(0), Rational(1), "sqrt2"};
  CHECK_THROWS_AS(solve_continuous(circle_system(0, root2.value() - 1.0, {}, ExactReal{Rational(-1), Rational(1), "sqrt2"}), 1), Error);
}

TEST_CASE("cyclic base: measurable and continuous agree") {
  const auto sys = make_skew_system(make_cyclic_shift(4), make_cyclic_cocycle({1.0, 1.0, 1.0, -1.0}));
  for (int n = 0; n <= 6; ++n) {
    const auto m = solve_measurable(sys, n);
    const auto c = solve_continuous(sys, n);
    CHECK(m.kind == c.kind);
    CHECK(c.solvable() == (n % 2 == 0));
    if (c.witness) {
      CHECK(equation_residual(sys, *c.witness, n, default_check_grid(sys.base)) < 1e-15);
      check_koopman_fixed(sys, c);
    }
  }
  const auto r = compute_report(sys, 6);
  CHECK(r.n_o == 2);
  CHECK(r.k_o == 1);
}

TEST_CASE("subgroup law on random cyclic cocycles with roots of unity") {
  Rng rng(5);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<complex> values;
    for (int r = 0; r < 5; ++r) values.push_back(turn(pick(rng) / 6.0));
    const auto sys = make_skew_system(make_cyclic_shift(5), make_cyclic_cocycle(values));
    const auto grid = default_check_grid(sys.base);
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        const auto sa = solve_continuous(sys, a);
        const auto sb = solve_continuous(sys, b);
        if (!sa.solvable() || !sb.solvable()) continue;
        const auto sab = solve_continuous(sys, a + b);
        REQUIRE(sab.solvable());
        CHECK(distance_up_to_scalar(sys.base, *sab.witness, product(*sa.witness, *sb.witness), grid) <
              1e-10);
      }
    }
  }
}
