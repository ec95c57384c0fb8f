#include <doctest.h>

#include <cmath>
#include <functional>

#include "anzai/error.hpp"
#include "anzai/sampling.hpp"
#include "anzai/spectral_factorization.hpp"

using namespace anzai;

namespace {

bool throws_tag(ErrorTag tag, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.tag() == tag;
  }
  return false;
}

LaurentPoly abs_squared_poly(const std::vector<complex>& g) {
  LaurentPoly q;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      q.add_to(static_cast<int>(i) - static_cast<int>(j), g[i] * std::conj(g[j]));
    }
  }
  return q;
}

}  // namespace

TEST_CASE("polynomial roots and expansion") {
  const std::vector<complex> roots{{2.0, 0.0}, {0.0, -3.0}, {-1.5, 0.5}};
  const auto coeffs = poly_from_roots(roots, {2.0, 1.0});
  REQUIRE(coeffs.size() == 4);
  CHECK(std::abs(coeffs[3] - complex{2.0, 1.0}) < 1e-15);
  const auto found = polynomial_roots(coeffs);
  REQUIRE(found.size() == 3);
  for (const auto& r : roots) {
    double best = 1e9;
    for (const auto& f : found) best = std::min(best, std::abs(f - r));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("3 + z + 1/z factors as phi + z/phi") {
  const LaurentPoly q({{-1, 1.0}, {0, 3.0}, {1, 1.0}});
  const auto f = fejer_riesz_scalar(q);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  REQUIRE(f.degree == 1);
  REQUIRE(f.roots.size() == 1);
  CHECK(std::abs(f.roots[0] - complex{-phi * phi, 0.0}) < 1e-12);
  CHECK(std::abs(f.coeffs[0] - phi) < 1e-12);
  CHECK(std::abs(f.coeffs[1] - 1.0 / phi) < 1e-12);
  CHECK(f.residual < 1e-12);
}

TEST_CASE("constant and scaled inputs") {
  const auto c = fejer_riesz_scalar(LaurentPoly({{0, 4.0}}));
  CHECK(c.degree == 0);
  REQUIRE(c.coeffs.size() == 1);
  CHECK(std::abs(c.coeffs[0] - 2.0) < 1e-15);

  const LaurentPoly q({{-1, 0.5}, {0, 1.25}, {1, 0.5}});  // |1 + z/2|^2
  const auto f = fejer_riesz_scalar(q);
  CHECK(std::abs(f.coeffs[0] - 1.0) < 1e-12);
  CHECK(std::abs(f.coeffs[1] - 0.5) < 1e-12);

  const auto g = fejer_riesz_scalar(q * complex{9.0, 0.0});
  CHECK(std::abs(g.coeffs[0] - 3.0) < 1e-12);
  CHECK(std::abs(g.coeffs[1] - 1.5) < 1e-12);
}

TEST_CASE("analytic factors with roots outside the disk are recovered") {
  Rng rng(11);
  std::uniform_real_distribution<double> mod(1.2, 3.0), arg(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<complex> roots;
    for (int i = 0; i < 3; ++i) roots.push_back(mod(rng) * turn(arg(rng)));
    auto g = poly_from_roots(roots, random_complex(rng) + complex{2.0, 0.0});
    const complex phase = std::abs(g[0]) / g[0];
    for (auto& c : g) c *= phase;
    const auto f = fejer_riesz_scalar(abs_squared_poly(g));
    REQUIRE(f.coeffs.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(f.coeffs[i] - g[i]) < 1e-9);
    CHECK(f.coeffs[0].real() > 0.0);
    CHECK(f.coeffs[0].imag() == 0.0);
    for (const auto& r : f.roots) CHECK(std::abs(r) > 1.0);
  }
}

TEST_CASE("factorization errors") {
  CHECK(throws_tag(ErrorTag::kInvalidArgument,
                   [] { fejer_riesz_scalar(LaurentPoly({{-1, 1.0}, {0, 3.0}, {1, 2.0}})); }));
  CHECK(throws_tag(ErrorTag::kNotPositive,
                   [] { fejer_riesz_scalar(LaurentPoly({{-1, 1.0}, {0, 1.0}, {1, 1.0}})); }));
  // |1 + z|^2 vanishes at z = -1.
  CHECK(throws_tag(ErrorTag::kNotPositive,
                   [] { fejer_riesz_scalar(LaurentPoly({{-1, 1.0}, {0, 2.0}, {1, 1.0}})); }));
  CHECK(throws_tag(ErrorTag::kNotPositive, [] { fejer_riesz_scalar(LaurentPoly()); }));
}

TEST_CASE("trailing coefficients below tolerance are trimmed") {
  const LaurentPoly q({{-2, 1e-12}, {-1, 1.0}, {0, 3.0}, {1, 1.0}, {2, 1e-12}});
  const auto f = fejer_riesz_scalar(q);
  CHECK(f.degree == 1);
  CHECK(f.residual < 1e-10);
}

TEST_CASE("verify_factorization measures the residual") {
  const LaurentPoly q({{-1, 1.0}, {0, 3.0}, {1, 1.0}});
  CHECK(verify_factorization(q, {2.0, 0.5}, 256) > 0.1);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(verify_factorization(q, {phi, 1.0 / phi}, 256) < 1e-14);
}

TEST_CASE("parametric factorization over Z_inf with a vanishing top coefficient") {
  const auto base = make_zinf_shift();
  ParametricTrigPoly p;
  // b_1 vanishes for l >= 0 and at infinity, so the stratum drops there.
  p.coeffs[-1] = ZInfFn{-3, {1.0, 1.0, 1.0}, 0.0};
  p.coeffs[0] = ZInfFn{0, {}, 3.0};
  p.coeffs[1] = ZInfFn{-3, {1.0, 1.0, 1.0}, 0.0};
  const std::vector<BasePoint> grid{zinf_point(-2), zinf_point(0), zinf_infinity()};
  const auto table = fejer_riesz_parametric(base, p, grid);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.degree == 1);
  CHECK(table.rows[0].stratum == 1);
  CHECK(table.rows[1].stratum == 0);
  CHECK(table.rows[2].stratum == 0);
  CHECK(std::abs(table.sup_p - 5.0) < 1e-9);
  CHECK(table.max_residual < 1e-12);
  for (const auto& row : table.rows) {
    CHECK(row.coefficient_bound_ok);
    CHECK(row.sup_bound_ok);
  }
}

TEST_CASE("parametric errors name the point") {
  const auto base = make_cyclic_shift(2);
  ParametricTrigPoly p;
  p.coeffs[0] = CyclicFn{{3.0, 1.0}};
  p.coeffs[1] = CyclicFn{{1.0, 1.0}};
  p.coeffs[-1] = CyclicFn{{1.0, 1.0}};
  try {
    fejer_riesz_parametric(base, p, {cyclic_point(0), cyclic_point(1)});
    FAIL("expected NOT_POSITIVE");
  } catch (const Error& e) {
    CHECK(e.tag() == ErrorTag::kNotPositive);
    CHECK(std::string(e.what()).find("x = 1") != std::string::npos);
  }
}
