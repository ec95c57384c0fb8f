#include "anzai/unimodular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

using detail::overloaded;

complex unit(complex v) {
  if (std::abs(std::abs(v) - 1.0) > 1e-12) {
    throw Error(ErrorTag::kNotUnimodular, "value of modulus " + std::to_string(std::abs(v)));
  }
  return v / std::abs(v);
}

std::optional<ExactReal> add_exact(const std::optional<ExactReal>& a,
                                   const std::optional<ExactReal>& b) {
  if (!a || !b) return std::nullopt;
  if (!a->irrational_coeff.is_zero() && !b->irrational_coeff.is_zero() &&
      a->irrational != b->irrational) {
    return std::nullopt;
  }
  ExactReal out;
  out.rational = a->rational + b->rational;
  out.irrational_coeff = a->irrational_coeff + b->irrational_coeff;
  out.irrational = a->irrational_coeff.is_zero() ? b->irrational : a->irrational;
  if (out.irrational_coeff.is_zero()) out.irrational.clear();
  return out;
}

}  // namespace

complex ZInfUnimodular::at(std::int64_t l) const {
  if (l < window_start) return left_tail;
  if (l >= window_end()) return right_tail;
  return values[static_cast<std::size_t>(l - window_start)];
}

BaseKind kind_of(const UnimodularFunction& u) { return static_cast<BaseKind>(u.index()); }

CircleCocycle make_circle_cocycle(std::int64_t winding, double offset, LaurentPoly oscillation,
                                  std::optional<ExactReal> offset_exact) {
  if (std::abs(oscillation.coeff(0)) != 0.0) {
    throw Error(ErrorTag::kInvalidArgument,
                "oscillating phase must have no zero mode; use the offset instead");
  }
  for (const auto& [j, c] : oscillation.coeffs()) {
    if (std::abs(oscillation.coeff(-j) - std::conj(c)) > 1e-12) {
      throw Error(ErrorTag::kInvalidArgument, "oscillating phase is not real-valued");
    }
  }
  if (offset_exact && std::abs(offset_exact->value() - offset) > 1e-12) {
    throw Error(ErrorTag::kInvalidArgument, "phase offset disagrees with its exact tag");
  }
  return CircleUnimodular{winding, offset, std::move(offset_exact), oscillation.pruned()};
}

CircleCocycle make_zinf_cocycle(std::int64_t window_start, std::vector<complex> values,
                                complex limit) {
  for (auto& v : values) v = unit(v);
  limit = unit(limit);
  return ZInfUnimodular{window_start, std::move(values), limit, limit, limit};
}

CircleCocycle make_cyclic_cocycle(std::vector<complex> values) {
  if (values.empty()) throw Error(ErrorTag::kInvalidArgument, "empty cyclic cocycle");
  for (auto& v : values) v = unit(v);
  return CyclicUnimodular{std::move(values)};
}

CircleCocycle trivial_cocycle(const BaseSystem& sys) {
  return std::visit(overloaded{
                        [](const CircleRotation&) -> CircleCocycle {
                          return CircleUnimodular{0, 0.0, ExactReal{}, {}};
                        },
                        [](const ZInfShift&) -> CircleCocycle { return ZInfUnimodular{}; },
                        [](const CyclicShift& c) -> CircleCocycle {
                          return CyclicUnimodular{
                              std::vector<complex>(static_cast<std::size_t>(c.n), 1.0)};
                        },
                    },
                    sys);
}

bool is_continuous(const UnimodularFunction& u) {
  if (const auto* z = std::get_if<ZInfUnimodular>(&u)) {
    return z->left_tail == z->at_infinity && z->right_tail == z->at_infinity;
  }
  return true;
}

complex evaluate(const BaseSystem& sys, const UnimodularFunction& u, const BasePoint& x) {
  check_point(sys, x);
  if (sys.index() != u.index()) {
    throw Error(ErrorTag::kVariantMismatch, "unimodular function and system kinds differ");
  }
  return std::visit(overloaded{
                        [&](const CircleUnimodular& f) {
                          const double t = std::get<CirclePoint>(x).t;
                          double phase = static_cast<double>(f.winding) * t + f.offset;
                          for (const auto& [j, c] : f.oscillation.coeffs()) {
                            phase += (c * turn(static_cast<double>(j) * t)).real();
                          }
                          return turn(phase);
                        },
                        [&](const ZInfUnimodular& f) {
                          const auto& p = std::get<ZInfPoint>(x);
                          return p.is_infinity() ? f.at_infinity : f.at(*p.l);
                        },
                        [&](const CyclicUnimodular& f) {
                          const auto r = std::get<CyclicPoint>(x).r;
                          if (static_cast<std::size_t>(r) >= f.values.size()) {
                            throw Error(ErrorTag::kVariantMismatch, "cyclic length mismatch");
                          }
                          return f.values[static_cast<std::size_t>(r)];
                        },
                    },
                    u);
}

UnimodularFunction power(const UnimodularFunction& u, std::int64_t n) {
  return std::visit(overloaded{
                        [&](const CircleUnimodular& f) -> UnimodularFunction {
                          CircleUnimodular out;
                          out.winding = f.winding * n;
                          out.offset = f.offset * static_cast<double>(n);
                          if (f.offset_exact) out.offset_exact = f.offset_exact->scaled(n);
                          out.oscillation = f.oscillation * static_cast<double>(n);
                          return out;
                        },
                        [&](const ZInfUnimodular& f) -> UnimodularFunction {
                          ZInfUnimodular out = f;
                          for (auto& v : out.values) v = ipow(v, n);
                          out.left_tail = ipow(f.left_tail, n);
                          out.right_tail = ipow(f.right_tail, n);
                          out.at_infinity = ipow(f.at_infinity, n);
                          return out;
                        },
                        [&](const CyclicUnimodular& f) -> UnimodularFunction {
                          CyclicUnimodular out = f;
                          for (auto& v : out.values) v = ipow(v, n);
                          return out;
                        },
                    },
                    u);
}

UnimodularFunction product(const UnimodularFunction& a, const UnimodularFunction& b) {
  if (a.index() != b.index()) {
    throw Error(ErrorTag::kVariantMismatch, "unimodular functions of different kinds");
  }
  return std::visit(
      overloaded{
          [&](const CircleUnimodular& f) -> UnimodularFunction {
            const auto& g = std::get<CircleUnimodular>(b);
            return CircleUnimodular{f.winding + g.winding, f.offset + g.offset,
                                    add_exact(f.offset_exact, g.offset_exact),
                                    (f.oscillation + g.oscillation).pruned()};
          },
          [&](const ZInfUnimodular& f) -> UnimodularFunction {
            const auto& g = std::get<ZInfUnimodular>(b);
            ZInfUnimodular out;
            if (f.values.empty() && g.values.empty()) {
              out.window_start = 0;
            } else if (f.values.empty()) {
              out.window_start = g.window_start;
            } else if (g.values.empty()) {
              out.window_start = f.window_start;
            } else {
              out.window_start = std::min(f.window_start, g.window_start);
            }
            const std::int64_t end = std::max(f.values.empty() ? out.window_start : f.window_end(),
                                              g.values.empty() ? out.window_start : g.window_end());
            for (std::int64_t l = out.window_start; l < end; ++l) out.values.push_back(f.at(l) * g.at(l));
            out.left_tail = f.left_tail * g.left_tail;
            out.right_tail = f.right_tail * g.right_tail;
            out.at_infinity = f.at_infinity * g.at_infinity;
            return out;
          },
          [&](const CyclicUnimodular& f) -> UnimodularFunction {
            const auto& g = std::get<CyclicUnimodular>(b);
            if (f.values.size() != g.values.size()) {
              throw Error(ErrorTag::kVariantMismatch, "cyclic lengths differ");
            }
            CyclicUnimodular out = f;
            for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= g.values[i];
            return out;
          },
      },
      a);
}

UnimodularFunction rotate(const UnimodularFunction& u, complex c) {
  c = unit(c);
  if (c == complex{1.0, 0.0}) return u;
  return std::visit(overloaded{
                        [&](const CircleUnimodular& f) -> UnimodularFunction {
                          CircleUnimodular out = f;
                          out.offset += std::arg(c) / kTwoPi;
                          out.offset_exact.reset();
                          return out;
                        },
                        [&](const ZInfUnimodular& f) -> UnimodularFunction {
                          ZInfUnimodular out = f;
                          for (auto& v : out.values) v *= c;
                          out.left_tail *= c;
                          out.right_tail *= c;
                          out.at_infinity *= c;
                          return out;
                        },
                        [&](const CyclicUnimodular& f) -> UnimodularFunction {
                          CyclicUnimodular out = f;
                          for (auto& v : out.values) v *= c;
                          return out;
                        },
                    },
                    u);
}

std::optional<BaseFunction> to_base_function(const UnimodularFunction& u) {
  return std::visit(
      overloaded{
          [](const CircleUnimodular& f) -> std::optional<BaseFunction> {
            if (!f.oscillation.pruned().empty()) return std::nullopt;
            const auto w = f.winding;
            if (w > kDefaultFrequencyCap || w < -kDefaultFrequencyCap) return std::nullopt;
            const complex c = f.offset == 0.0 ? complex{1.0, 0.0} : turn(f.offset);
            return CircleFn{LaurentPoly::monomial(static_cast<int>(w), c)};
          },
          [](const ZInfUnimodular& f) -> std::optional<BaseFunction> {
            if (!is_continuous(f)) return std::nullopt;
            return ZInfFn{f.window_start, f.values, f.at_infinity};
          },
          [](const CyclicUnimodular& f) -> std::optional<BaseFunction> {
            return CyclicFn{f.values};
          },
      },
      u);
}

BasePoint reference_point(const BaseSystem& sys) {
  return std::visit(overloaded{
                        [](const CircleRotation&) { return circle_point(0.0); },
                        [](const ZInfShift&) { return zinf_infinity(); },
                        [](const CyclicShift&) { return cyclic_point(0); },
                    },
                    sys);
}

double distance_up_to_scalar(const BaseSystem& sys, const UnimodularFunction& a,
                             const UnimodularFunction& b, const std::vector<BasePoint>& grid) {
  if (grid.empty()) return 0.0;
  const complex c = evaluate(sys, a, grid.front()) / evaluate(sys, b, grid.front());
  double d = 0.0;
  for (const auto& x : grid) d = std::max(d, std::abs(evaluate(sys, a, x) - c * evaluate(sys, b, x)));
  return d;
}

}  // namespace anzai
