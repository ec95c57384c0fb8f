#include <doctest.h>

#include <cmath>

#include "anzai/error.hpp"
#include "anzai/exact.hpp"
#include "anzai/laurent.hpp"

using namespace anzai;

TEST_CASE("rationals reduce and keep a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK((Rational(1, 2) / Rational(1, 4)).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("named irrationals and exact reals") {
  CHECK(named_irrational_value("golden").value() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));
  CHECK_FALSE(named_irrational_value("pi").has_value());
  ExactReal e{Rational(1, 2), Rational(2), "sqrt2"};
  CHECK(e.value() == doctest::Approx(0.5 + 2.0 * std::sqrt(2.0)));
  const auto s = e.scaled(-3);
  CHECK(s.rational == Rational(-3, 2));
  CHECK(s.irrational_coeff == Rational(-6));
}

TEST_CASE("ipow is exact on quarter turns") {
  CHECK(ipow(complex{0.0, 1.0}, 4) == complex{1.0, 0.0});
  CHECK(ipow(complex{-1.0, 0.0}, 7) == complex{-1.0, 0.0});
  CHECK(ipow(complex{0.0, 1.0}, -1) == complex{0.0, -1.0});
}

TEST_CASE("Laurent polynomial algebra") {
  const LaurentPoly p({{-1, 1.0}, {0, 3.0}, {1, 1.0}});
  CHECK(p.degree() == 1);
  CHECK(p.evaluate(1.0) == complex{5.0, 0.0});
  CHECK(p.evaluate(-1.0) == complex{1.0, 0.0});
  const LaurentPoly sq = p * p;
  CHECK(sq.coeff(2) == complex{1.0, 0.0});
  CHECK(sq.coeff(0) == complex{11.0, 0.0});
  const LaurentPoly q({{2, {1.0, 2.0}}});
  CHECK(q.circle_conjugate().coeff(-2) == complex{1.0, -2.0});
  CHECK((p - p).pruned().empty());
  CHECK(coefficient_distance(p, p * 2.0) == 3.0);
}
