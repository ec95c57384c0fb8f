#include "anzai/fixtures_zinf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "anzai/detail/format.hpp"
#include "anzai/expectations.hpp"
#include "anzai/sampling.hpp"

namespace anzai {

namespace {

using detail::format_double;

complex at_infinity(const BaseSystem& base, const TorusObservable& h, int n) {
  const auto* g = h.slot(n);
  return g ? evaluate_base(base, *g, zinf_infinity()) : complex{};
}

class Recorder {
 public:
  explicit Recorder(GoldenReport& report) : report_(report) {}

  // Runs `check`; an exception counts as a failure with its message as detail.
  void run(const std::string& identity, const std::function<bool(std::string&)>& check) {
    GoldenCheck c;
    c.identity = identity;
    try {
      c.passed = check(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  GoldenReport& report_;
};

}  // namespace

int GoldenReport::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const GoldenCheck& c) { return !c.passed; }));
}

ZInfFixture build_fixture() {
  ZInfFixture fx{make_skew_system(make_zinf_shift(), make_zinf_cocycle(0, {-1.0}, 1.0))};
  return fx;
}

GoldenReport run_golden_suite(double tol, unsigned seed) {
  return run_golden_suite(build_fixture().sys, tol, seed);
}

GoldenReport run_golden_suite(const SkewSystem& sys, double tol, unsigned seed) {
  const ZInfFixture expected;
  const BaseSystem& base = sys.base;
  GoldenReport report;
  Recorder rec(report);
  Rng rng(seed);

  rec.run("f(0) = -1", [&](std::string& d) {
    const complex v = evaluate(base, sys.cocycle, zinf_point(0));
    d = "f(0) = " + format_double(v.real());
    return v == complex{-1.0, 0.0};
  });
  rec.run("f(inf) = 1", [&](std::string&) {
    return evaluate(base, sys.cocycle, zinf_infinity()) == complex{1.0, 0.0};
  });
  rec.run("mu_o(g) = g(inf)", [&](std::string&) {
    const BaseFunction g = ZInfFn{-2, {1.0, 2.0, {0.0, 3.0}}, 0.5};
    return integrate(base, g) == complex{0.5, 0.0};
  });

  report.cohomology = compute_report(sys, 8);
  const CohomologyReport& coh = report.cohomology;
  rec.run("(n_o, m_o, k_o) = (1, 2, 2)", [&](std::string& d) {
    d = "got (" + std::to_string(coh.n_o) + ", " + std::to_string(coh.m_o) + ", " +
        std::to_string(coh.k_o) + ")";
    return coh.n_o == expected.expected_n_o && coh.m_o == expected.expected_m_o &&
           coh.k_o == expected.expected_k_o;
  });
  rec.run("classification NON_UNIQUE", [&](std::string& d) {
    d = to_string(coh.classification);
    return coh.classification == ErgodicClass::kNonUnique;
  });

  rec.run("level 1 has no continuous solution: g(0) = -g(0)", [&](std::string& d) {
    const auto cont = solve_continuous(sys, 1);
    const auto meas = solve_measurable(sys, 1);
    if (cont.solvable() || !meas.witness) return false;
    const auto& w = std::get<ZInfUnimodular>(*meas.witness);
    d = "tails " + format_double(w.left_tail.real()) + " and " + format_double(w.right_tail.real());
    return w.left_tail == -w.right_tail;
  });
  rec.run("level 1 measurable solution, value 1 at inf", [&](std::string&) {
    const auto meas = solve_measurable(sys, 1);
    return meas.kind == SolutionKind::kMeasurableOnly && meas.witness &&
           evaluate(base, *meas.witness, zinf_infinity()) == complex{1.0, 0.0};
  });
  rec.run("level 2 continuous solution is constant", [&](std::string&) {
    const auto cont = solve_continuous(sys, 2);
    if (cont.kind != SolutionKind::kContinuous || !cont.witness) return false;
    for (std::int64_t l = -64; l <= 64; ++l) {
      if (evaluate(base, *cont.witness, zinf_point(l)) != complex{1.0, 0.0}) return false;
    }
    return evaluate(base, *cont.witness, zinf_infinity()) == complex{1.0, 0.0};
  });

  std::vector<TorusObservable> hs;
  for (int i = 0; i < 10; ++i) hs.push_back(random_observable(base, rng, 4));

  rec.run("T(h)(z) = h(inf, z)", [&](std::string& d) {
    for (const auto& h : hs) {
      const auto t = t_map(sys, coh, h);
      for (int l = -4; l <= 4; ++l) {
        if (t.coeffs.coeff(l) != at_infinity(base, h, l)) {
          d = "mismatch at l = " + std::to_string(l);
          return false;
        }
      }
    }
    return true;
  });

  rec.run("E_A(h) = sum (h_2n(inf) + h_2n+1(inf)(a12 + a21 z^2)) z^2n", [&](std::string& d) {
    double worst = 0.0;
    for (const auto& h : hs) {
      const auto A = random_expectation_matrix(2, rng);
      const auto e = e_a(sys, coh, A, h);
      if (e.m_o != 2) return false;
      LaurentPoly expect;
      for (int n = -3; n <= 3; ++n) {
        // Coefficient of z^{2n}: h_2n + h_2n+1 a12 + h_2n-1 a21.
        expect.add_to(n, at_infinity(base, h, 2 * n) + at_infinity(base, h, 2 * n + 1) * A(0, 1) +
                             at_infinity(base, h, 2 * n - 1) * A(1, 0));
      }
      worst = std::max(worst, coefficient_distance(e.coeffs, expect));
    }
    d = "max deviation " + format_double(worst);
    return worst <= tol;
  });

  rec.run("E_{I/2}(h) = sum h_2n(inf) z^2n", [&](std::string&) {
    const auto half = ExpectationMatrix::scalar_identity(2);
    for (const auto& h : hs) {
      const auto e = e_a(sys, coh, half, h);
      for (int n = -3; n <= 3; ++n) {
        if (e.coeffs.coeff(n) != at_infinity(base, h, 2 * n)) return false;
      }
      if (e.coeffs.coeffs().size() > 5) return false;
    }
    return true;
  });

  rec.run("E_A fixes z^2", [&](std::string&) {
    const auto A = random_expectation_matrix(2, rng);
    const auto e = e_a(sys, coh, A, character(base, 2));
    return observable_distance(to_observable(base, e), character(base, 2)) == 0.0;
  });

  rec.run("absorption residual 0 for z^3, z^2, z", [&](std::string& d) {
    double worst = 0.0;
    for (int n : {3, 2, 1}) worst = std::max(worst, check_absorption(sys, coh, character(base, n)));
    d = "residual " + format_double(worst);
    return worst == 0.0;
  });

  std::vector<BasePoint> xs{zinf_infinity()};
  for (int l = -3; l <= 3; ++l) xs.push_back(zinf_point(l));

  rec.run("4|g0||g1||a12| <= |g0|^2 + |g1|^2", [&](std::string& d) {
    double worst_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10; ++i) {
      const auto A = random_expectation_matrix(2, rng);
      const BaseFunction g0 = random_base_function(base, rng);
      const BaseFunction g1 = random_base_function(base, rng);
      TorusObservable p(kind_of(base));
      p.set(0, g0);
      p.set(1, g1);
      const auto h = abs_squared(p);
      const auto dom = check_domination(sys, coh, A, h, xs, 64, tol);
      const double a0 = std::abs(evaluate_base(base, g0, zinf_infinity()));
      const double a1 = std::abs(evaluate_base(base, g1, zinf_infinity()));
      const complex h1 = at_infinity(base, h, 1);
      const double h0 = a0 * a0 + a1 * a1;
      const double exact_min = h0 - 2.0 * (h1 * A(0, 1)).real() - 2.0 * std::abs(h1) * std::abs(A(0, 1));
      const double cs_bound = h0 - 4.0 * a0 * a1 * std::abs(A(0, 1));
      if (!dom.passed || dom.min_value < exact_min - tol || exact_min < cs_bound - tol ||
          cs_bound < -tol) {
        d = "sample " + std::to_string(i) + ": grid min " + format_double(dom.min_value) +
            ", closed-form min " + format_double(exact_min);
        return false;
      }
      worst_gap = std::min(worst_gap, dom.min_value);
    }
    d = "smallest grid margin " + format_double(worst_gap);
    return true;
  });

  rec.run("boundary |a12| = 1/2, g0 = g1 = 1 has margin 0", [&](std::string& d) {
    const auto A = ExpectationMatrix::make(2, {0.5, 0.5, 0.5, 0.5});
    const auto h = abs_squared(add(character(base, 0), character(base, 1)));
    const auto dom = check_domination(sys, coh, A, h, xs, 64, tol);
    d = "margin " + format_double(dom.min_value);
    return dom.min_value >= -1e-12 && dom.min_value <= 1e-9;
  });

  return report;
}

}  // namespace anzai
