#include "anzai/cohomology.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "anzai/detail/format.hpp"
#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

using detail::overloaded;

constexpr double kUnitTol = 1e-12;
constexpr double kSmallDenominator = 1e-8;

CohomologySolution constant_solution(const SkewSystem& sys, int n) {
  CohomologySolution s;
  s.level = n;
  s.kind = SolutionKind::kContinuous;
  s.witness = trivial_cocycle(sys.base);
  return s;
}

CohomologySolution no_solution(int n, std::string note) {
  CohomologySolution s;
  s.level = n;
  s.kind = SolutionKind::kNone;
  s.notes.push_back(std::move(note));
  return s;
}

// Integer d with n*c - d*alpha in Z, where c is the cocycle's constant phase.
// nullopt: no such d. Throws INEXACT when the question cannot be settled exactly.
std::optional<std::int64_t> circle_resonance(const CircleRotation& rot, const CircleUnimodular& f,
                                             int n) {
  const bool zero_offset =
      f.offset == 0.0 && (!f.offset_exact || (f.offset_exact->rational.is_zero() &&
                                              f.offset_exact->irrational_coeff.is_zero()));
  if (zero_offset) return 0;
  if (!f.offset_exact) {
    throw Error(ErrorTag::kInexact, "cocycle phase offset has no exact tag");
  }
  if (!rot.alpha_exact) {
    throw Error(ErrorTag::kInexact, "rotation number has no exact tag");
  }
  const ExactReal& c = *f.offset_exact;
  const ExactReal& a = *rot.alpha_exact;
  if (!c.irrational_coeff.is_zero() && c.irrational != a.irrational) {
    throw Error(ErrorTag::kInexact, "phase offset and rotation number use different irrationals '" +
                                        c.irrational + "' and '" + a.irrational + "'");
  }
  // n c - d a = (n r_c - d r_a) + (n s_c - d s_a) w, with 1 and w rationally independent.
  const Rational d_rat = Rational(n) * c.irrational_coeff / a.irrational_coeff;
  if (!d_rat.is_integer()) return std::nullopt;
  const std::int64_t d = d_rat.num();
  const Rational rest = Rational(n) * c.rational - Rational(d) * a.rational;
  if (!rest.is_integer()) return std::nullopt;
  return d;
}

CohomologySolution circle_solution(const SkewSystem& sys, int n) {
  const auto& rot = std::get<CircleRotation>(sys.base);
  const auto& f = std::get<CircleUnimodular>(sys.cocycle);
  if (f.winding * n != 0) {
    return no_solution(n, "winding " + std::to_string(f.winding) + " times level " +
                              std::to_string(n) + " is nonzero");
  }
  const auto d = circle_resonance(rot, f, n);
  if (!d) return no_solution(n, "constant phase not in Z + alpha Z at this level");

  CohomologySolution s;
  s.level = n;
  s.kind = SolutionKind::kContinuous;
  // g = exp(-2 pi i (psi(t) + d t)) with psi_j (e^{2 pi i j alpha} - 1) = n phi_j.
  LaurentPoly psi;
  for (const auto& [j, phi] : f.oscillation.coeffs()) {
    const complex den = turn(static_cast<double>(j) * rot.alpha) - 1.0;
    if (std::abs(den) < kSmallDenominator) {
      s.notes.push_back("ill-conditioned small denominator at frequency " + std::to_string(j) +
                        ": |e^{2 pi i j alpha} - 1| = " + detail::format_double(std::abs(den)));
    }
    psi.set(j, static_cast<double>(n) * phi / den);
  }
  CircleUnimodular g;
  g.winding = -*d;
  g.oscillation = psi * -1.0;
  double psi_at_zero = 0.0;
  for (const auto& [j, c] : psi.coeffs()) psi_at_zero += c.real();
  g.offset = psi_at_zero;
  if (psi.empty()) g.offset_exact = ExactReal{};
  s.witness = g;
  return s;
}

struct ZInfBackSubstitution {
  bool tail_ok = false;      // L^n == 1
  bool continuous = false;   // additionally the window product is 1
  ZInfUnimodular witness;
};

ZInfBackSubstitution zinf_back_substitute(const ZInfUnimodular& f, int n) {
  ZInfBackSubstitution out;
  const complex ln = ipow(f.at_infinity, n);
  out.tail_ok = std::abs(ln - 1.0) <= kUnitTol;
  if (!out.tail_ok) return out;
  // g = 1 on the right tail and at infinity; g(l) = g(l+1) f(l)^n leftwards.
  ZInfUnimodular& g = out.witness;
  g.window_start = f.window_start;
  g.values.assign(f.values.size(), 1.0);
  complex running = 1.0;
  for (std::size_t i = f.values.size(); i-- > 0;) {
    running *= ipow(f.values[i], n);
    g.values[i] = running;
  }
  out.continuous = std::abs(running - 1.0) <= kUnitTol;
  g.left_tail = out.continuous ? complex{1.0, 0.0} : running;
  g.right_tail = 1.0;
  g.at_infinity = 1.0;
  return out;
}

CohomologySolution cyclic_solution(const SkewSystem& sys, int n) {
  const auto& f = std::get<CyclicUnimodular>(sys.cocycle);
  complex cycle = 1.0;
  for (const auto& v : f.values) cycle *= ipow(v, n);
  const double tol = kUnitTol * static_cast<double>(f.values.size());
  if (std::abs(cycle - 1.0) > tol) {
    return no_solution(n, "full-cycle product of f^n differs from 1");
  }
  CyclicUnimodular g;
  g.values.resize(f.values.size());
  complex running = 1.0;
  for (std::size_t r = 0; r < f.values.size(); ++r) {
    g.values[r] = running;
    running *= std::conj(ipow(f.values[r], n));
  }
  CohomologySolution s;
  s.level = n;
  s.kind = SolutionKind::kContinuous;
  s.witness = g;
  return s;
}

}  // namespace

const char* to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::kContinuous: return "CONTINUOUS";
    case SolutionKind::kMeasurableOnly: return "MEASURABLE_ONLY";
    case SolutionKind::kNone: return "NONE";
  }
  return "?";
}

const char* to_string(ErgodicClass c) {
  switch (c) {
    case ErgodicClass::kUniquelyErgodic: return "UNIQUELY_ERGODIC";
    case ErgodicClass::kUniquelyErgodicFixedPoint: return "UE_WRT_FIXED_POINT";
    case ErgodicClass::kTopologicallyErgodicNotUe: return "TOPOLOGICALLY_ERGODIC_NOT_UE";
    case ErgodicClass::kNonUnique: return "NON_UNIQUE";
  }
  return "?";
}

CohomologySolution solve_continuous(const SkewSystem& sys, int n) {
  if (n == 0) return constant_solution(sys, 0);
  return std::visit(overloaded{
                        [&](const CircleUnimodular&) { return circle_solution(sys, n); },
                        [&](const ZInfUnimodular& f) {
                          auto bs = zinf_back_substitute(f, n);
                          if (!bs.tail_ok) return no_solution(n, "f(inf)^n differs from 1");
                          if (!bs.continuous) {
                            return no_solution(
                                n, "tail limits disagree: g(-inf) = (window product) g(+inf)");
                          }
                          CohomologySolution s;
                          s.level = n;
                          s.kind = SolutionKind::kContinuous;
                          s.witness = bs.witness;
                          return s;
                        },
                        [&](const CyclicUnimodular&) { return cyclic_solution(sys, n); },
                    },
                    sys.cocycle);
}

CohomologySolution solve_measurable(const SkewSystem& sys, int n) {
  if (n == 0) return constant_solution(sys, 0);
  return std::visit(
      overloaded{
          [&](const CircleUnimodular&) {
            auto s = circle_solution(sys, n);
            s.notes.push_back(
                "finite phase polynomial: measurable and continuous solvability coincide");
            return s;
          },
          [&](const ZInfUnimodular& f) {
            auto bs = zinf_back_substitute(f, n);
            if (!bs.tail_ok) return no_solution(n, "f(inf)^n differs from 1");
            CohomologySolution s;
            s.level = n;
            s.kind = bs.continuous ? SolutionKind::kContinuous : SolutionKind::kMeasurableOnly;
            s.witness = bs.witness;
            if (!bs.continuous) {
              s.notes.push_back(
                  "mu_o is the point mass at infinity; the class is fixed by g(inf) = 1 and the "
                  "witness is the back-substituted pattern");
            }
            return s;
          },
          [&](const CyclicUnimodular&) {
            auto s = cyclic_solution(sys, n);
            s.notes.push_back("full-support measure: measurable solutions are continuous");
            return s;
          },
      },
      sys.cocycle);
}

double equation_residual(const SkewSystem& sys, const UnimodularFunction& g, int n,
                         const std::vector<BasePoint>& grid) {
  double d = 0.0;
  for (const auto& x : grid) {
    const complex lhs = evaluate(sys.base, g, apply_theta(sys.base, x)) *
                        ipow(evaluate(sys.base, sys.cocycle, x), n);
    d = std::max(d, std::abs(lhs - evaluate(sys.base, g, x)));
  }
  return d;
}

std::vector<BasePoint> default_check_grid(const BaseSystem& sys) {
  std::vector<BasePoint> grid;
  std::visit(overloaded{
                 [&](const CircleRotation&) {
                   for (int j = 0; j < 64; ++j) grid.push_back(circle_point(j / 64.0));
                 },
                 [&](const ZInfShift&) {
                   grid.push_back(zinf_infinity());
                   for (int l = -64; l <= 64; ++l) grid.push_back(zinf_point(l));
                 },
                 [&](const CyclicShift& c) {
                   for (std::int64_t r = 0; r < c.n; ++r) grid.push_back(cyclic_point(r));
                 },
             },
             sys);
  return grid;
}

CohomologyReport compute_report(const SkewSystem& sys, int n_max) {
  if (n_max < 1) throw Error(ErrorTag::kInvalidArgument, "n_max must be >= 1");
  CohomologyReport report;
  report.n_max = n_max;

  std::vector<CohomologySolution> measurable;
  std::vector<CohomologySolution> continuous;
  for (int n = 1; n <= n_max; ++n) {
    measurable.push_back(solve_measurable(sys, n));
    continuous.push_back(solve_continuous(sys, n));
    if (report.n_o == 0 && measurable.back().solvable()) report.n_o = n;
    if (report.m_o == 0 && continuous.back().solvable()) report.m_o = n;
  }

  if (report.n_o == 0) {
    report.notes.push_back("no nontrivial measurable solution for levels 1.." +
                           std::to_string(n_max) + " (bounded search, not a certificate)");
  }
  if (report.m_o == 0 && report.n_o > 0) {
    report.notes.push_back("no nontrivial continuous solution for levels 1.." +
                           std::to_string(n_max) + " (bounded search, not a certificate)");
  }
  if (report.n_o > 0 && report.m_o > 0) {
    if (report.m_o % report.n_o != 0) {
      report.notes.push_back("inconsistent search: m_o is not a multiple of n_o");
    }
    report.k_o = report.m_o / report.n_o;
  }

  report.u = report.n_o > 0 ? measurable[report.n_o - 1] : solve_measurable(sys, 0);
  report.v = report.m_o > 0 ? continuous[report.m_o - 1] : solve_continuous(sys, 0);

  if (report.n_o == 0) {
    report.classification = ErgodicClass::kUniquelyErgodic;
  } else if (report.k_o == 1) {
    report.classification = ErgodicClass::kUniquelyErgodicFixedPoint;
  } else if (report.k_o == 0) {
    report.classification = ErgodicClass::kTopologicallyErgodicNotUe;
  } else {
    report.classification = ErgodicClass::kNonUnique;
  }

  // Subgroup and power-law cross-checks inside the search window.
  const auto grid = default_check_grid(sys.base);
  bool subgroup_ok = true;
  bool powers_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto& ms = measurable[n - 1];
    const auto& cs = continuous[n - 1];
    const bool expect_m = report.n_o > 0 && n % report.n_o == 0;
    const bool expect_c = report.m_o > 0 && n % report.m_o == 0;
    if (ms.solvable() != expect_m || cs.solvable() != expect_c) subgroup_ok = false;
    if (expect_m && ms.witness && report.u.witness) {
      const auto pw = power(*report.u.witness, n / report.n_o);
      if (distance_up_to_scalar(sys.base, *ms.witness, pw, grid) > 1e-10) powers_ok = false;
    }
    if (expect_c && cs.witness && report.v.witness) {
      const auto pw = power(*report.v.witness, n / report.m_o);
      if (distance_up_to_scalar(sys.base, *cs.witness, pw, grid) > 1e-10) powers_ok = false;
    }
  }
  report.notes.push_back(subgroup_ok ? "solvable levels form the expected subgroups within the bound"
                                     : "solvable levels do not form subgroups within the bound");
  report.notes.push_back(powers_ok ? "higher-level witnesses are powers of the generators"
                                   : "higher-level witnesses deviate from generator powers");
  return report;
}

}  // namespace anzai
