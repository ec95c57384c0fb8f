#include "anzai/expectations.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anzai/detail/format.hpp"
#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

using detail::overloaded;

constexpr int kQuadratureNodes = 4096;

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Integral of g u^{-l} against mu_o.
complex integrate_twisted(const BaseSystem& sys, const BaseFunction& g, const UnimodularFunction& u,
                          int l) {
  if (l == 0) return integrate(sys, g);
  const auto twist = power(u, -l);
  return std::visit(
      overloaded{
          [&](const CircleRotation&) {
            if (const auto exact = to_base_function(twist)) {
              return integrate(sys, multiply(g, *exact));
            }
            // Oscillating phase: trapezoid rule, spectrally accurate for smooth periodic
            // integrands.
            complex sum{};
            for (int j = 0; j < kQuadratureNodes; ++j) {
              const auto x = circle_point(static_cast<double>(j) / kQuadratureNodes);
              sum += evaluate_base(sys, g, x) * evaluate(sys, twist, x);
            }
            return sum / static_cast<double>(kQuadratureNodes);
          },
          [&](const ZInfShift&) {
            const auto inf = zinf_infinity();
            return evaluate_base(sys, g, inf) * evaluate(sys, twist, inf);
          },
          [&](const CyclicShift& c) {
            complex sum{};
            for (std::int64_t r = 0; r < c.n; ++r) {
              const auto x = cyclic_point(r);
              sum += evaluate_base(sys, g, x) * evaluate(sys, twist, x);
            }
            return sum / static_cast<double>(c.n);
          },
      },
      sys);
}

BaseFunction generator_power(const UnimodularFunction& u, int l) {
  auto g = to_base_function(power(u, l));
  if (!g) {
    throw Error(ErrorTag::kNotRepresentable,
                "generator power has no exact base representation; evaluate pointwise instead");
  }
  return *g;
}

// A nonconstant base function used for module-property samples of E_n.
BaseFunction sample_base_function(const BaseSystem& sys) {
  return std::visit(overloaded{
                        [](const CircleRotation&) -> BaseFunction {
                          return CircleFn{LaurentPoly({{-1, {0.25, -0.5}}, {0, 1.0}, {2, {0.0, 0.75}}})};
                        },
                        [](const ZInfShift&) -> BaseFunction {
                          return ZInfFn{-1, {0.5, {0.0, 2.0}, -1.0}, 0.25};
                        },
                        [](const CyclicShift& c) -> BaseFunction {
                          std::vector<complex> v;
                          for (std::int64_t r = 0; r < c.n; ++r) {
                            v.emplace_back(1.0 + 0.5 * static_cast<double>(r), -0.25 * static_cast<double>(r % 3));
                          }
                          return CyclicFn{v};
                        },
                    },
                    sys);
}

void require_positive_level(const CohomologyReport& report, const char* what) {
  if (report.m_o < 1) {
    throw Error(ErrorTag::kInvalidArgument,
                std::string(what) + " needs a nontrivial continuous generator (m_o >= 1)");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrices

ExpectationMatrix ExpectationMatrix::make(int k, std::vector<complex> entries) {
  if (k < 1) throw Error(ErrorTag::kInvalidArgument, "matrix size must be >= 1");
  if (entries.size() != static_cast<std::size_t>(k * k)) {
    throw Error(ErrorTag::kInvalidArgument, "expected " + std::to_string(k * k) + " entries");
  }
  Eigen::MatrixXcd m(k, k);
  complex trace{};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = entries[static_cast<std::size_t>(i * k + j)];
    trace += m(i, i);
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorTag::kNotPositiveSemidefinite, "matrix is not Hermitian");
  }
  if (std::abs(trace - 1.0) > 1e-12) {
    throw Error(ErrorTag::kInvalidArgument,
                "trace " + detail::format_double(trace.real()) + " differs from 1");
  }
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    throw Error(ErrorTag::kNotPositiveSemidefinite,
                "minimum eigenvalue " + detail::format_double(min_eig));
  }
  return ExpectationMatrix(k, std::move(entries));
}

ExpectationMatrix ExpectationMatrix::scalar_identity(int k) {
  if (k < 1) throw Error(ErrorTag::kInvalidArgument, "matrix size must be >= 1");
  std::vector<complex> e(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i * k + i)] = 1.0 / k;
  return ExpectationMatrix(k, std::move(e));
}

complex l_trace(const ExpectationMatrix& A, int l) {
  if (l < 0 || l >= A.k()) {
    throw Error(ErrorTag::kInvalidArgument, "l-trace index " + std::to_string(l) + " out of range");
  }
  complex s{};
  for (int i = 0; i + l < A.k(); ++i) s += A(i, i + l);
  return s;
}

complex sub_trace(const ExpectationMatrix& A, int l) {
  if (l < 0 || l >= A.k()) {
    throw Error(ErrorTag::kInvalidArgument, "sub-trace index " + std::to_string(l) + " out of range");
  }
  complex s{};
  for (int i = 0; i + l < A.k(); ++i) s += A(i + l, i);
  return s;
}

PolyMatrix PolyMatrix::identity(int k) {
  PolyMatrix m(k);
  for (int i = 0; i < k; ++i) m.at(i, i) = LaurentPoly::constant(1.0);
  return m;
}

PolyMatrix PolyMatrix::adjoint() const {
  PolyMatrix m(k_);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) m.at(i, j) = at(j, i).circle_conjugate();
  }
  return m;
}

PolyMatrix PolyMatrix::pruned() const {
  PolyMatrix m(k_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].pruned();
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.k_ != b.k_) throw Error(ErrorTag::kInvalidArgument, "matrix sizes differ");
  PolyMatrix m(a.k_);
  for (int i = 0; i < a.k_; ++i) {
    for (int j = 0; j < a.k_; ++j) {
      LaurentPoly s;
      for (int r = 0; r < a.k_; ++r) s += a.at(i, r) * b.at(r, j);
      m.at(i, j) = s.pruned();
    }
  }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.k_ != b.k_) throw Error(ErrorTag::kInvalidArgument, "matrix sizes differ");
  PolyMatrix m(a.k_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = (a.entries_[i] + b.entries_[i]).pruned();
  return m;
}

PolyMatrix shift_unitary(int k) {
  if (k < 1) throw Error(ErrorTag::kInvalidArgument, "shift unitary needs k >= 1");
  PolyMatrix u(k);
  for (int i = 1; i < k; ++i) u.at(i, i - 1) = LaurentPoly::constant(1.0);
  u.at(0, k - 1) = LaurentPoly::monomial(1);
  return u;
}

PolyMatrix embed_pi_k(int k, const LaurentPoly& p) {
  const PolyMatrix u = shift_unitary(k);
  const PolyMatrix u_inv = u.adjoint();
  PolyMatrix out(k);
  for (const auto& [j, c] : p.coeffs()) {
    PolyMatrix term = PolyMatrix::identity(k);
    const PolyMatrix& step = j >= 0 ? u : u_inv;
    for (int r = 0; r < std::abs(j); ++r) term = term * step;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) term.at(a, b) *= c;
    }
    out = out + term;
  }
  return out.pruned();
}

LaurentPoly f_a(const ExpectationMatrix& A, const LaurentPoly& p) {
  const int k = A.k();
  LaurentPoly out;
  for (const auto& [l, c] : p.coeffs()) {
    const int m = floor_div(l, k);
    const int rest = l - m * k;
    if (rest == 0) {
      out.add_to(m * k, c);
    } else {
      out.add_to(m * k, c * l_trace(A, rest));
      out.add_to((m + 1) * k, c * sub_trace(A, k - rest));
    }
  }
  return out.pruned();
}

LaurentPoly f_a_matrix(const ExpectationMatrix& A, const LaurentPoly& p) {
  const int k = A.k();
  const PolyMatrix m = embed_pi_k(k, p);
  LaurentPoly trace;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) trace += A(i, j) * m.at(j, i);
  }
  LaurentPoly out;
  for (const auto& [e, c] : trace.coeffs()) out.add_to(e * k, c);
  return out.pruned();
}

// ---------------------------------------------------------------------------
// Elements

complex evaluate_element(const BaseSystem& sys, const A1Element& a, const BasePoint& x, complex z) {
  const complex gen = evaluate(sys, a.u, x) * ipow(z, a.n_o);
  complex s{};
  for (const auto& [l, c] : a.coeffs.coeffs()) s += c * ipow(gen, l);
  return s;
}

complex evaluate_element(const BaseSystem& sys, const FixedPointElement& e, const BasePoint& x,
                         complex z) {
  if (e.m_o == 0) return e.coeffs.coeff(0);
  const complex gen = evaluate(sys, e.v, x) * ipow(z, e.m_o);
  complex s{};
  for (const auto& [l, c] : e.coeffs.coeffs()) s += c * ipow(gen, l);
  return s;
}

TorusObservable to_observable(const BaseSystem& sys, const A1Element& a) {
  TorusObservable out(kind_of(sys));
  for (const auto& [l, c] : a.coeffs.coeffs()) {
    out.add_to(l * a.n_o, scale(generator_power(a.u, l), c));
  }
  return out;
}

TorusObservable to_observable(const BaseSystem& sys, const FixedPointElement& e) {
  if (e.m_o == 0) return constant_observable(sys, e.coeffs.coeff(0));
  TorusObservable out(kind_of(sys));
  for (const auto& [l, c] : e.coeffs.coeffs()) {
    out.add_to(l * e.m_o, scale(generator_power(e.v, l), c));
  }
  return out;
}

A1Element t_map(const SkewSystem& sys, const CohomologyReport& report, const TorusObservable& h) {
  if (report.n_o < 1 || !report.u.witness) {
    throw Error(ErrorTag::kInvalidArgument,
                "T needs a measurable generator (n_o >= 1); use the invariant state instead");
  }
  if (h.kind() != kind_of(sys.base)) {
    throw Error(ErrorTag::kVariantMismatch, "observable and system kinds differ");
  }
  A1Element out;
  out.n_o = report.n_o;
  out.u = *report.u.witness;
  for (const auto& [n, g] : h.slots()) {
    if (n % report.n_o != 0) continue;
    const int l = n / report.n_o;
    out.coeffs.add_to(l, integrate_twisted(sys.base, g, out.u, l));
  }
  out.coeffs = out.coeffs.pruned();
  return out;
}

FixedPointElement sigma_expand(const CohomologyReport& report, const LaurentPoly& b) {
  if (report.k_o < 1 || !report.v.witness) {
    throw Error(ErrorTag::kInvalidArgument, "sigma needs k_o >= 1");
  }
  FixedPointElement out;
  out.m_o = report.m_o;
  out.v = *report.v.witness;
  for (const auto& [l, c] : b.coeffs()) {
    if (l % report.k_o != 0) {
      throw Error(ErrorTag::kInvalidArgument, "coefficient at " + std::to_string(l) +
                                                  " is outside k_o Z");
    }
    out.coeffs.add_to(l / report.k_o, c);
  }
  out.coeffs = out.coeffs.pruned();
  return out;
}

FixedPointElement e_a(const SkewSystem& sys, const CohomologyReport& report,
                      const ExpectationMatrix& A, const TorusObservable& h) {
  require_positive_level(report, "E_A");
  if (A.k() != report.k_o) {
    throw Error(ErrorTag::kInvalidArgument, "matrix size " + std::to_string(A.k()) +
                                                " differs from k_o = " +
                                                std::to_string(report.k_o));
  }
  const A1Element t = t_map(sys, report, h);
  return sigma_expand(report, f_a(A, t.coeffs));
}

FixedPointElement canonical_expectation(const SkewSystem& sys, const CohomologyReport& report,
                                        const TorusObservable& h) {
  if (report.m_o >= 1) {
    return e_a(sys, report, ExpectationMatrix::scalar_identity(report.k_o), h);
  }
  FixedPointElement out;
  out.m_o = 0;
  out.v = trivial_cocycle(sys.base);
  out.coeffs = LaurentPoly::constant(integrate_torus(h, sys.base)).pruned();
  if (report.n_o >= 1) {
    out.notes.push_back(
        "m_o = 0 with n_o >= 1: invariant states are not unique; returned the mu_o x Haar value");
  }
  return out;
}

FixedPointElement add(const FixedPointElement& a, const FixedPointElement& b) {
  if (a.m_o != b.m_o) throw Error(ErrorTag::kInvalidArgument, "elements over different generators");
  FixedPointElement out = a;
  out.coeffs = (a.coeffs + b.coeffs).pruned();
  return out;
}

FixedPointElement scale(const FixedPointElement& a, complex s) {
  FixedPointElement out = a;
  out.coeffs = (a.coeffs * s).pruned();
  return out;
}

double element_distance(const FixedPointElement& a, const FixedPointElement& b) {
  return coefficient_distance(a.coeffs, b.coeffs);
}

bool expectations_equal(const ExpectationMatrix& A, const ExpectationMatrix& B) {
  if (A.k() != B.k()) throw Error(ErrorTag::kInvalidArgument, "matrix sizes differ");
  for (int l = 1; l < A.k(); ++l) {
    if (std::abs(l_trace(A, l) - l_trace(B, l)) > 1e-12) return false;
  }
  return true;
}

double check_absorption(const SkewSystem& sys, const CohomologyReport& report,
                        const TorusObservable& h) {
  require_positive_level(report, "absorption");
  const auto lhs = canonical_expectation(sys, report, periodic_expectation(h, report.m_o));
  const auto rhs = canonical_expectation(sys, report, h);
  return element_distance(lhs, rhs);
}

DominationResult check_domination(const SkewSystem& sys, const CohomologyReport& report,
                                  const ExpectationMatrix& A, const TorusObservable& h,
                                  const std::vector<BasePoint>& xs, int z_size, double tol) {
  require_positive_level(report, "domination");
  const auto sampled = sample(sys.base, h, xs, z_size);
  for (const auto& v : sampled.values) {
    if (v.real() < -tol || std::abs(v.imag()) > tol) {
      throw Error(ErrorTag::kNotPositive, "observable is not nonnegative on the grid");
    }
  }
  const auto diff = add(scale(canonical_expectation(sys, report, h), report.m_o),
                        scale(e_a(sys, report, A, h), -1.0));
  DominationResult out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (const auto& x : xs) {
    for (int j = 0; j < z_size; ++j) {
      out.min_value =
          std::min(out.min_value, evaluate_element(sys.base, diff, x, z_node(j, z_size)).real());
    }
  }
  out.passed = out.min_value >= -tol;
  return out;
}

// ---------------------------------------------------------------------------
// Axiom suite

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

AxiomReport ce_axiom_suite(const BaseSystem& sys, const ExpectationUnderTest& E,
                           const AxiomSamples& samples, double exact_tol, double positivity_tol) {
  AxiomReport report;
  report.name = E.name;
  auto record = [&](std::string axiom, double worst, bool ok, double tol) {
    report.checks.push_back({std::move(axiom), worst, tol, ok});
  };

  std::vector<TorusObservable> images;
  images.reserve(samples.h.size());
  for (const auto& h : samples.h) images.push_back(E.apply(h));

  double worst = 0.0;
  for (std::size_t i = 0; i < samples.h.size(); ++i) {
    worst = std::max(worst, observable_distance(E.apply(images[i]), images[i]));
  }
  record("idempotence", worst, worst <= exact_tol, exact_tol);

  const auto one = constant_observable(sys, 1.0);
  worst = observable_distance(E.apply(one), one);
  record("unitality", worst, worst <= exact_tol, exact_tol);

  worst = 0.0;
  for (const auto& g : E.range_samples) {
    for (std::size_t i = 0; i < samples.h.size(); ++i) {
      worst = std::max(worst, observable_distance(E.apply(multiply(g, samples.h[i])),
                                                  multiply(g, images[i])));
    }
  }
  record("module", worst, worst <= exact_tol, exact_tol);

  worst = 0.0;
  for (const auto& act : E.actions) {
    for (std::size_t i = 0; i < samples.h.size(); ++i) {
      worst = std::max(worst, observable_distance(E.apply(act(samples.h[i])), images[i]));
    }
  }
  record("invariance", worst, worst <= exact_tol, exact_tol);

  worst = 0.0;
  for (const auto& act : E.actions) {
    for (const auto& img : images) worst = std::max(worst, observable_distance(act(img), img));
  }
  record("range_invariance", worst, worst <= exact_tol, exact_tol);

  // A positive element is real and nonnegative: score min(Re v, -|Im v|).
  double min_value = std::numeric_limits<double>::infinity();
  for (const auto& p : samples.p) {
    const auto img = E.apply(abs_squared(p));
    const auto s = sample(sys, img, samples.xs, samples.z_size);
    for (const auto& v : s.values) min_value = std::min({min_value, v.real(), -std::abs(v.imag())});
  }
  if (samples.p.empty()) min_value = 0.0;
  record("positivity", min_value, min_value >= -positivity_tol, positivity_tol);
  return report;
}

namespace {

std::vector<TorusObservable> generator_range_samples(const SkewSystem& sys,
                                                     const CohomologyReport& report) {
  std::vector<TorusObservable> out;
  out.push_back(constant_observable(sys.base, {2.5, -1.0}));
  if (report.m_o < 1) return out;
  FixedPointElement e;
  e.m_o = report.m_o;
  e.v = *report.v.witness;
  for (int j : {1, -1, 2}) {
    e.coeffs = LaurentPoly::monomial(j);
    out.push_back(to_observable(sys.base, e));
  }
  e.coeffs = LaurentPoly({{-1, {0.3, 0.2}}, {0, {0.5, -0.25}}, {1, 1.5}});
  out.push_back(to_observable(sys.base, e));
  return out;
}

std::vector<ObservableMap> koopman_action(const SkewSystem& sys) {
  return {[sys](const TorusObservable& h) { return koopman(sys, h); }};
}

}  // namespace

ExpectationUnderTest e_a_under_test(const SkewSystem& sys, const CohomologyReport& report,
                                    const ExpectationMatrix& A) {
  ExpectationUnderTest E;
  E.name = "E_A";
  E.apply = [sys, report, A](const TorusObservable& h) {
    return to_observable(sys.base, e_a(sys, report, A, h));
  };
  E.actions = koopman_action(sys);
  E.range_samples = generator_range_samples(sys, report);
  return E;
}

ExpectationUnderTest canonical_under_test(const SkewSystem& sys, const CohomologyReport& report) {
  ExpectationUnderTest E;
  E.name = "E_can";
  E.apply = [sys, report](const TorusObservable& h) {
    return to_observable(sys.base, canonical_expectation(sys, report, h));
  };
  E.actions = koopman_action(sys);
  E.range_samples = generator_range_samples(sys, report);
  return E;
}

ExpectationUnderTest convex_complement_under_test(const SkewSystem& sys,
                                                  const CohomologyReport& report,
                                                  const ExpectationMatrix& A) {
  if (report.m_o < 2) {
    throw Error(ErrorTag::kInvalidArgument, "convex complement needs m_o >= 2");
  }
  ExpectationUnderTest E;
  E.name = "F";
  E.apply = [sys, report, A](const TorusObservable& h) {
    const double m = report.m_o;
    const auto f = scale(add(scale(canonical_expectation(sys, report, h), m),
                             scale(e_a(sys, report, A, h), -1.0)),
                         1.0 / (m - 1.0));
    return to_observable(sys.base, f);
  };
  E.actions = koopman_action(sys);
  E.range_samples = generator_range_samples(sys, report);
  return E;
}

ExpectationUnderTest periodic_under_test(const BaseSystem& sys, int n) {
  if (n < 1) throw Error(ErrorTag::kInvalidArgument, "periodic expectation needs n >= 1");
  ExpectationUnderTest E;
  E.name = "E_" + std::to_string(n);
  E.apply = [n](const TorusObservable& h) { return periodic_expectation(h, n); };
  for (int l = 0; l < n; ++l) {
    E.actions.push_back([n, l](const TorusObservable& h) { return dual_rotation(h, n, l); });
  }
  const auto g = sample_base_function(sys);
  E.range_samples = {constant_observable(sys, {2.5, -1.0}), monomial(sys, g, 0), monomial(sys, g, n),
                     add(monomial(sys, g, -n), character(sys, 2 * n, {0.0, 1.5}))};
  return E;
}

}  // namespace anzai
