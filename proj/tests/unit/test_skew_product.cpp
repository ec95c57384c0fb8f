#include <doctest.h>

#include <cmath>

#include "anzai/error.hpp"
#include "anzai/sampling.hpp"
#include "anzai/skew_product.hpp"

using namespace anzai;

namespace {

SkewSystem flip_system() {
  return make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {-1.0}, 1.0));
}

SkewSystem golden_winding_one() {
  return make_skew_system(make_circle_rotation(ExactReal{Rational(0), Rational(1), "golden"}),
                          make_circle_cocycle(1));
}

SkewSystem cyclic_oracle() {
  return make_skew_system(make_cyclic_shift(4), make_cyclic_cocycle({1.0, 1.0, 1.0, -1.0}));
}

}  // namespace

TEST_CASE("skew systems validate the cocycle") {
  CHECK_THROWS_AS(make_skew_system(make_cyclic_shift(3), make_cyclic_cocycle({1.0, 1.0})), Error);
  CHECK_THROWS_AS(make_skew_system(make_zinf_shift(), make_cyclic_cocycle({1.0})), Error);
  CHECK_THROWS_AS(make_zinf_cocycle(0, {2.0}), Error);
}

TEST_CASE("apply_skew multiplies the fiber by the cocycle") {
  const auto sys = flip_system();
  const auto [x, z] = apply_skew(sys, zinf_point(0), complex{0.0, 1.0});
  CHECK(*std::get<ZInfPoint>(x).l == 1);
  CHECK(z == complex{0.0, -1.0});
  CHECK_THROWS_AS(apply_skew(sys, zinf_point(0), 0.5), Error);
}

TEST_CASE("koopman agrees with composition pointwise") {
  Rng rng(3);
  for (const auto& sys : {flip_system(), cyclic_oracle(), golden_winding_one()}) {
    const auto h = random_observable(sys.base, rng, 2);
    const auto kh = koopman(sys, h);
    std::vector<BasePoint> xs;
    if (kind_of(sys.base) == BaseKind::kZInf) xs = {zinf_infinity(), zinf_point(-1), zinf_point(0)};
    if (kind_of(sys.base) == BaseKind::kCyclic) xs = {cyclic_point(0), cyclic_point(3)};
    if (kind_of(sys.base) == BaseKind::kCircle) xs = {circle_point(0.0), circle_point(0.3)};
    for (const auto& x : xs) {
      for (int j = 0; j < 8; ++j) {
        const complex z = z_node(j, 8);
        const auto [y, w] = apply_skew(sys, x, z);
        CHECK(std::abs(evaluate_torus(sys.base, kh, x, z) - evaluate_torus(sys.base, h, y, w)) < 1e-12);
      }
    }
  }
}

TEST_CASE("koopman refuses oscillating circle cocycles") {
  const auto sys = make_skew_system(make_circle_rotation(ExactReal{Rational(-1), Rational(1), "sqrt2"}),
                                    make_circle_cocycle(0, 0.0, LaurentPoly({{-1, 0.1}, {1, 0.1}})));
  CHECK_THROWS_AS(koopman(sys, character(sys.base, 1)), Error);
  // Orbit-level operations still work.
  CHECK(std::abs(std::abs(cocycle_product(sys, circle_point(0.2), 50)) - 1.0) < 1e-12);
}

TEST_CASE("cocycle products") {
  const auto sys = flip_system();
  CHECK(cocycle_product(sys, zinf_point(-3), 0) == complex{1.0, 0.0});
  CHECK(cocycle_product(sys, zinf_point(-3), 3) == complex{1.0, 0.0});
  CHECK(cocycle_product(sys, zinf_point(-3), 4) == complex{-1.0, 0.0});
  CHECK(cocycle_product(sys, zinf_infinity(), 100) == complex{1.0, 0.0});
}

TEST_CASE("Cesaro and Birkhoff averages agree on the cyclic oracle") {
  const auto sys = cyclic_oracle();
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = random_observable(sys.base, rng, 2);
    for (std::int64_t N : {1, 5, 12}) {
      const auto c = cesaro_average(sys, h, N);
      for (std::int64_t r = 0; r < 4; ++r) {
        const complex z = z_node(static_cast<int>(r), 7);
        CHECK(std::abs(evaluate_torus(sys.base, c, cyclic_point(r), z) -
                       birkhoff_average(sys, h, cyclic_point(r), z, N)) < 1e-12);
      }
    }
  }
}

TEST_CASE("winding-one golden rotation averages z to zero") {
  const auto sys = golden_winding_one();
  const auto h = character(sys.base, 1);
  const complex avg = birkhoff_average(sys, h, circle_point(0.0), 1.0, 100000);
  CHECK(std::abs(avg) <= 1e-2);
}

TEST_CASE("schedules must increase") {
  const auto sys = cyclic_oracle();
  CHECK_THROWS_AS(birkhoff_averages(sys, character(sys.base, 1), cyclic_point(0), 1.0, {10, 10}),
                  Error);
}

TEST_CASE("ue_diagnostic") {
  SUBCASE("winding one converges") {
    const auto sys = golden_winding_one();
    std::vector<BasePoint> xs;
    for (int j = 0; j < 4; ++j) xs.push_back(circle_point(j / 4.0));
    const auto r = ue_diagnostic(sys, character(sys.base, 1), {1000, 10000}, xs, 4);
    CHECK(r.status == DiagnosticStatus::kConverging);
    CHECK(r.rows.size() == 1);
  }
  SUBCASE("the flip system does not, once the grid reaches orbit scale") {
    const auto sys = flip_system();
    const std::vector<std::int64_t> schedule{1000, 10000};
    const auto h = character(sys.base, 1);
    const auto near = ue_diagnostic(sys, h, schedule, {zinf_infinity(), zinf_point(0)}, 4);
    CHECK(near.status == DiagnosticStatus::kConverging);
    const auto far = ue_diagnostic(
        sys, h, schedule, {zinf_infinity(), zinf_point(0), zinf_point(-5000), zinf_point(-10000)}, 4);
    CHECK(far.status == DiagnosticStatus::kNonConverging);
  }
  SUBCASE("result does not depend on the worker count") {
    const auto sys = golden_winding_one();
    std::vector<BasePoint> xs;
    for (int j = 0; j < 6; ++j) xs.push_back(circle_point(j / 6.0));
    setenv("ANZAI_THREADS", "1", 1);
    const auto a = ue_diagnostic(sys, character(sys.base, 1), {100, 1000}, xs, 5);
    setenv("ANZAI_THREADS", "4", 1);
    const auto b = ue_diagnostic(sys, character(sys.base, 1), {100, 1000}, xs, 5);
    unsetenv("ANZAI_THREADS");
    CHECK(a.rows.back().sup_difference == b.rows.back().sup_difference);
  }
}
