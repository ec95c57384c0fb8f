#include <doctest.h>

#include <cmath>
#include <sstream>

#include "anzai/error.hpp"
#include "anzai/sampling.hpp"
#include "anzai/torus_fourier.hpp"

using namespace anzai;

TEST_CASE("observables drop zero slots and keep their kind") {
  const auto zinf = make_zinf_shift();
  auto h = character(zinf, 2, 3.0);
  h.add_to(2, constant_function(zinf, -3.0));
  CHECK(h.empty());
  CHECK_THROWS_AS(h.set(1, CyclicFn{{1.0}}), Error);
}

TEST_CASE("series product and conjugation") {
  const auto cyc = make_cyclic_shift(2);
  const auto p = add(character(cyc, 0, 1.0), monomial(cyc, CyclicFn{{2.0, {0.0, 1.0}}}, 1));
  const auto h = abs_squared(p);
  for (int r = 0; r < 2; ++r) {
    for (int j = 0; j < 8; ++j) {
      const complex z = z_node(j, 8);
      const complex pv = evaluate_torus(cyc, p, cyclic_point(r), z);
      const complex hv = evaluate_torus(cyc, h, cyclic_point(r), z);
      CHECK(std::abs(hv - std::norm(pv)) < 1e-14);
    }
  }
}

TEST_CASE("fejer sum, periodic expectation and dual rotation") {
  const auto zinf = make_zinf_shift();
  TorusObservable h(BaseKind::kZInf);
  for (int n = -3; n <= 3; ++n) h.set(n, constant_function(zinf, n + 10.0));

  const auto f = fejer_sum(h, 2);
  CHECK(f.slot(3) == nullptr);
  CHECK(std::abs(evaluate_base(zinf, *f.slot(1), zinf_infinity()) - 11.0 * 2.0 / 3.0) < 1e-14);

  const auto e2 = periodic_expectation(h, 2);
  CHECK(e2.slots().size() == 3);
  CHECK(observable_distance(periodic_expectation(e2, 2), e2) == 0.0);
  CHECK_THROWS_AS(periodic_expectation(h, 0), Error);

  CHECK(observable_distance(dual_rotation(h, 3, 3), h) == 0.0);
  CHECK(observable_distance(dual_rotation(e2, 2, 1), e2) == 0.0);
  const auto r = dual_rotation(h, 4, 1);
  CHECK(std::abs(evaluate_base(zinf, *r.slot(1), zinf_infinity()) - complex{0.0, 11.0}) < 1e-14);
}

TEST_CASE("evaluation requires a unimodular fiber point") {
  const auto zinf = make_zinf_shift();
  CHECK_THROWS_AS(evaluate_torus(zinf, character(zinf, 1), zinf_infinity(), 2.0), Error);
  CHECK(integrate_torus(character(zinf, 1), zinf) == complex{});
  CHECK(integrate_torus(character(zinf, 0, 4.0), zinf) == complex{4.0, 0.0});
}

TEST_CASE("sampled Fourier coefficients recover the slots") {
  const auto sys = make_cyclic_shift(3);
  Rng rng(7);
  const auto h = random_observable(sys, rng, 3);
  std::vector<BasePoint> xs{cyclic_point(0), cyclic_point(2)};
  const auto s = sample(sys, h, xs, 16);
  for (int n = -3; n <= 3; ++n) {
    const auto c = fourier_coefficient(s, n);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const complex expect = h.slot(n) ? evaluate_base(sys, *h.slot(n), xs[i]) : complex{};
      CHECK(std::abs(c[i] - expect) < 1e-13);
    }
  }
  CHECK_THROWS_AS(fourier_coefficient(s, 8), Error);
}

TEST_CASE("z nodes hit quarter turns exactly and csv has a fixed header") {
  CHECK(z_node(0, 8) == complex{1.0, 0.0});
  CHECK(z_node(2, 8) == complex{0.0, 1.0});
  CHECK(z_node(4, 8) == complex{-1.0, 0.0});
  const auto zinf = make_zinf_shift();
  std::ostringstream os;
  write_csv(os, sample(zinf, character(zinf, 1), {zinf_infinity()}, 4));
  CHECK(os.str().rfind("x_index,x,z_index,z_re,z_im,re,im\n0,inf,0,1,0,1,0\n", 0) == 0);
}
