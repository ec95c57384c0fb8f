#include <doctest.h>

#include <cmath>
#include <functional>

#include "anzai/error.hpp"
#include "anzai/expectations.hpp"
#include "anzai/sampling.hpp"

using namespace anzai;

namespace {

SkewSystem flip_system() {
  return make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {-1.0}, 1.0));
}

// Constant cocycle -1 on a 3-cycle: n_o = m_o = 2, k_o = 1.
SkewSystem cyclic_sign() {
  return make_skew_system(make_cyclic_shift(3), make_cyclic_cocycle({-1.0, -1.0, -1.0}));
}

// Z_inf cocycle with f(0) = f(1) = i and limit 1: k_o = 4.
SkewSystem four_step() {
  return make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {{0.0, 1.0}}, 1.0));
}

bool throws_tag(ErrorTag tag, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.tag() == tag;
  }
  return false;
}

std::vector<BasePoint> zinf_grid() {
  std::vector<BasePoint> xs{zinf_infinity()};
  for (int l = -6; l <= 6; ++l) xs.push_back(zinf_point(l));
  return xs;
}

}  // namespace

TEST_CASE("expectation matrices are validated") {
  CHECK_NOTHROW(ExpectationMatrix::make(2, {0.5, 0.5, 0.5, 0.5}));
  CHECK(throws_tag(ErrorTag::kNotPositiveSemidefinite, [] { ExpectationMatrix::make(2, {0.5, 0.6, 0.6, 0.5}); }));
  CHECK(throws_tag(ErrorTag::kNotPositiveSemidefinite, [] { ExpectationMatrix::make(2, {0.5, 0.1, 0.2, 0.5}); }));
  CHECK(throws_tag(ErrorTag::kInvalidArgument, [] { ExpectationMatrix::make(2, {0.5, 0.0, 0.0, 0.6}); }));
  CHECK(throws_tag(ErrorTag::kInvalidArgument, [] { ExpectationMatrix::make(2, {1.0}); }));
  const auto I3 = ExpectationMatrix::scalar_identity(3);
  CHECK(std::abs(I3(1, 1) - 1.0 / 3.0) < 1e-16);
  CHECK(I3(0, 1) == complex{});
}

TEST_CASE("diagonal traces") {
  const auto A = ExpectationMatrix::make(
      3, {0.5, {0.1, 0.1}, 0.05, {0.1, -0.1}, 0.3, {0.0, 0.02}, 0.05, {0.0, -0.02}, 0.2});
  CHECK(std::abs(l_trace(A, 0) - 1.0) < 1e-15);
  CHECK(std::abs(l_trace(A, 1) - complex{0.1, 0.12}) < 1e-15);
  CHECK(std::abs(l_trace(A, 2) - 0.05) < 1e-15);
  CHECK(std::abs(sub_trace(A, 1) - std::conj(l_trace(A, 1))) < 1e-15);
}

TEST_CASE("the shift unitary is a k-th root of z") {
  for (int k = 1; k <= 5; ++k) {
    const auto U = shift_unitary(k);
    PolyMatrix P = PolyMatrix::identity(k);
    for (int i = 0; i < k; ++i) P = P * U;
    PolyMatrix zI(k);
    for (int i = 0; i < k; ++i) zI.at(i, i) = LaurentPoly::monomial(1);
    CHECK(P.pruned() == zI);
    CHECK((U * U.adjoint()).pruned() == PolyMatrix::identity(k));
    CHECK(embed_pi_k(k, LaurentPoly::monomial(-1)).pruned() == U.adjoint().pruned());
  }
}

TEST_CASE("F_A closed form agrees with the matrix oracle") {
  Rng rng(3);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto A = random_expectation_matrix(k, rng);
      LaurentPoly p;
      for (int l = -7; l <= 7; ++l) p.set(l, random_complex(rng));
      CHECK(coefficient_distance(f_a(A, p), f_a_matrix(A, p)) < 1e-13);
    }
  }
}

TEST_CASE("F_A on single characters") {
  const auto A = ExpectationMatrix::make(2, {0.5, {0.2, 0.1}, {0.2, -0.1}, 0.5});
  CHECK(f_a(A, LaurentPoly::monomial(4)) == LaurentPoly::monomial(4));
  const auto img = f_a(A, LaurentPoly::monomial(1));
  CHECK(img.coeff(0) == A(0, 1));
  CHECK(img.coeff(2) == A(1, 0));
  const auto neg = f_a(A, LaurentPoly::monomial(-1));
  CHECK(neg.coeff(-2) == A(0, 1));
  CHECK(neg.coeff(0) == A(1, 0));
  // With k = 1 F_A is the identity.
  const auto one = ExpectationMatrix::scalar_identity(1);
  const LaurentPoly p({{-3, 1.0}, {2, {0.0, 2.0}}});
  CHECK(f_a(one, p) == p);
}

TEST_CASE("T evaluates at infinity on the flip system") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(9);
  const auto h = random_observable(sys.base, rng, 3);
  const auto t = t_map(sys, report, h);
  for (int l = -3; l <= 3; ++l) {
    const auto* g = h.slot(l);
    const complex expect = g ? evaluate_base(sys.base, *g, zinf_infinity()) : complex{};
    CHECK(t.coeffs.coeff(l) == expect);
  }
  CHECK(throws_tag(ErrorTag::kVariantMismatch,
                   [&] { t_map(sys, report, constant_observable(make_cyclic_shift(2), 1.0)); }));
}

TEST_CASE("T is contractive on the sampled grid") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_observable(sys.base, rng, 3);
    const auto t = t_map(sys, report, h);
    double sup_h = 0.0, sup_t = 0.0;
    for (const auto& x : zinf_grid()) {
      for (int j = 0; j < 128; ++j) {
        const complex z = z_node(j, 128);
        sup_h = std::max(sup_h, std::abs(evaluate_torus(sys.base, h, x, z)));
        sup_t = std::max(sup_t, std::abs(evaluate_element(sys.base, t, x, z)));
      }
    }
    CHECK(sup_t <= sup_h + 1e-9);
  }
}

TEST_CASE("sigma maps k_o multiples to generator powers") {
  const auto sys = four_step();
  const auto report = compute_report(sys, 8);
  REQUIRE(report.k_o == 4);
  const auto e = sigma_expand(report, LaurentPoly({{-4, 2.0}, {8, 1.0}}));
  CHECK(e.coeffs.coeff(-1) == complex{2.0, 0.0});
  CHECK(e.coeffs.coeff(2) == complex{1.0, 0.0});
  CHECK(throws_tag(ErrorTag::kInvalidArgument, [&] { sigma_expand(report, LaurentPoly::monomial(2)); }));
}

TEST_CASE("E_A values on the flip system") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  const auto A = ExpectationMatrix::make(2, {0.5, {0.3, 0.1}, {0.3, -0.1}, 0.5});
  const auto base = sys.base;
  // h = 2 + z: slot 1 picks up a12 at z^0 and a21 at z^2.
  const auto h = add(constant_observable(base, 2.0), character(base, 1));
  const auto e = e_a(sys, report, A, h);
  CHECK(e.m_o == 2);
  CHECK(e.coeffs.coeff(0) == complex{2.0, 0.0} + A(0, 1));
  CHECK(e.coeffs.coeff(1) == A(1, 0));
  CHECK(throws_tag(ErrorTag::kInvalidArgument,
                   [&] { e_a(sys, report, ExpectationMatrix::scalar_identity(3), h); }));
  // The canonical expectation drops odd levels.
  const auto c = canonical_expectation(sys, report, h);
  CHECK(c.coeffs == LaurentPoly::constant(2.0));
}

TEST_CASE("equal expectations from different matrices") {
  const auto A = ExpectationMatrix::make(2, {0.5, 0.25, 0.25, 0.5});
  const auto B = ExpectationMatrix::make(2, {0.7, 0.25, 0.25, 0.3});
  CHECK(expectations_equal(A, B));
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = random_observable(sys.base, rng, 4);
    CHECK(element_distance(e_a(sys, report, A, h), e_a(sys, report, B, h)) == 0.0);
  }
  const auto C = ExpectationMatrix::make(2, {0.5, -0.25, -0.25, 0.5});
  CHECK_FALSE(expectations_equal(A, C));
}

TEST_CASE("k_o = 1 leaves a single expectation") {
  const auto sys = cyclic_sign();
  const auto report = compute_report(sys, 8);
  REQUIRE(report.k_o == 1);
  Rng rng(2);
  const auto one = ExpectationMatrix::scalar_identity(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = random_observable(sys.base, rng, 3);
    CHECK(element_distance(e_a(sys, report, one, h), canonical_expectation(sys, report, h)) == 0.0);
  }
}

TEST_CASE("canonical expectation without a fixed-point generator") {
  const auto sys = make_skew_system(
      make_circle_rotation(ExactReal{Rational(0), Rational(1), "golden"}), make_circle_cocycle(1));
  const auto report = compute_report(sys, 4);
  const auto h = add(constant_observable(sys.base, 3.0), character(sys.base, 1));
  const auto c = canonical_expectation(sys, report, h);
  CHECK(c.m_o == 0);
  CHECK(c.coeffs == LaurentPoly::constant(3.0));
  CHECK(c.notes.empty());
  CHECK(throws_tag(ErrorTag::kInvalidArgument, [&] { t_map(sys, report, h); }));
}

TEST_CASE("absorption and domination") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_observable(sys.base, rng, 4);
    CHECK(check_absorption(sys, report, h) == 0.0);
    const auto A = random_expectation_matrix(2, rng);
    const auto p = random_observable(sys.base, rng, 2);
    const auto dom = check_domination(sys, report, A, abs_squared(p), zinf_grid(), 64);
    CHECK(dom.passed);
  }
  CHECK(throws_tag(ErrorTag::kNotPositive, [&] {
    check_domination(sys, report, ExpectationMatrix::scalar_identity(2),
                     character(sys.base, 1), zinf_grid(), 16);
  }));
}

TEST_CASE("axiom suites pass for E_n, E_A, E_can and F") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(21);
  AxiomSamples samples;
  for (int i = 0; i < 5; ++i) samples.h.push_back(random_observable(sys.base, rng, 4));
  for (int i = 0; i < 5; ++i) samples.p.push_back(random_observable(sys.base, rng, 2));
  samples.xs = zinf_grid();

  for (int n : {1, 2, 3, 5}) {
    const auto r = ce_axiom_suite(sys.base, periodic_under_test(sys.base, n), samples);
    CHECK_MESSAGE(r.passed(), r.name);
  }
  const auto A = random_expectation_matrix(2, rng);
  CHECK(ce_axiom_suite(sys.base, e_a_under_test(sys, report, A), samples).passed());
  CHECK(ce_axiom_suite(sys.base, canonical_under_test(sys, report), samples).passed());
  CHECK(ce_axiom_suite(sys.base, convex_complement_under_test(sys, report, A), samples).passed());
}

TEST_CASE("negative controls fail the expected axioms") {
  const auto sys = flip_system();
  const auto report = compute_report(sys, 8);
  Rng rng(22);
  AxiomSamples samples;
  for (int i = 0; i < 5; ++i) samples.h.push_back(random_observable(sys.base, rng, 4));
  for (int i = 0; i < 50; ++i) samples.p.push_back(random_observable(sys.base, rng, 3));
  samples.xs = zinf_grid();
  const auto A = ExpectationMatrix::make(2, {0.5, 0.5, 0.5, 0.5});

  // Evaluating at the point 0 instead of infinity is not Koopman invariant.
  auto at_zero = e_a_under_test(sys, report, A);
  at_zero.apply = [&](const TorusObservable& h) {
    LaurentPoly b;
    for (const auto& [n, g] : h.slots()) b.add_to(n, evaluate_base(sys.base, g, zinf_point(0)));
    return to_observable(sys.base, sigma_expand(report, f_a(A, b)));
  };
  const auto r1 = ce_axiom_suite(sys.base, at_zero, samples);
  CHECK_FALSE(r1.find("invariance")->passed);

  // Dropping the subdiagonal part of F_A keeps invariance and loses positivity.
  auto truncated = e_a_under_test(sys, report, A);
  truncated.apply = [&](const TorusObservable& h) {
    const auto t = t_map(sys, report, h);
    LaurentPoly b;
    for (const auto& [l, c] : t.coeffs.coeffs()) {
      const int m = l >= 0 ? l / 2 : -((-l + 1) / 2);
      if (l - 2 * m == 0) {
        b.add_to(l, c);
      } else {
        b.add_to(2 * m, c * A(0, 1));
      }
    }
    return to_observable(sys.base, sigma_expand(report, b));
  };
  const auto r2 = ce_axiom_suite(sys.base, truncated, samples);
  CHECK(r2.find("invariance")->passed);
  CHECK_FALSE(r2.find("positivity")->passed);

  CHECK(throws_tag(ErrorTag::kInvalidArgument, [&] {
    const auto product = make_skew_system(make_cyclic_shift(3), make_cyclic_cocycle({1.0, 1.0, 1.0}));
    convex_complement_under_test(product, compute_report(product, 4),
                                 ExpectationMatrix::scalar_identity(1));
  }));
}
