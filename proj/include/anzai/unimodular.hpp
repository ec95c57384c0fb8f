#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "anzai/base_system.hpp"

namespace anzai {

/// exp(2 pi i (winding * t + offset + psi(t))) with psi(t) = sum_{j != 0} psi_j e^{2 pi i j t}
/// real-valued (psi_{-j} = conj(psi_j)). Phases are stored, so |f| = 1 by construction.
/// `offset_exact`, when present, is the arithmetic identity of `offset`.
struct CircleUnimodular {
  std::int64_t winding = 0;
  double offset = 0.0;
  std::optional<ExactReal> offset_exact;
  LaurentPoly oscillation;
};

/// Unimodular two-sided sequence on Z u {inf}: window values, constant tails, and the
/// value at infinity. Continuous exactly when both tails equal the value at infinity.
struct ZInfUnimodular {
  std::int64_t window_start = 0;
  std::vector<complex> values;
  complex left_tail{1.0, 0.0};
  complex right_tail{1.0, 0.0};
  complex at_infinity{1.0, 0.0};

  complex at(std::int64_t l) const;
  std::int64_t window_end() const { return window_start + static_cast<std::int64_t>(values.size()); }
};

struct CyclicUnimodular {
  std::vector<complex> values;
};

/// A T-valued function on the base. Serves as the skew-product cocycle and as the
/// representative of cohomology solutions (which may be discontinuous on Z_inf).
using UnimodularFunction = std::variant<CircleUnimodular, ZInfUnimodular, CyclicUnimodular>;

/// The cocycle f : X_o -> T defining the skew product; always continuous.
using CircleCocycle = UnimodularFunction;

BaseKind kind_of(const UnimodularFunction& u);

/// Validating constructors. Values must be unimodular to 1e-12 and are renormalized.
CircleCocycle make_circle_cocycle(std::int64_t winding, double offset = 0.0,
                                  LaurentPoly oscillation = {},
                                  std::optional<ExactReal> offset_exact = std::nullopt);
CircleCocycle make_zinf_cocycle(std::int64_t window_start, std::vector<complex> values,
                                complex limit = 1.0);
CircleCocycle make_cyclic_cocycle(std::vector<complex> values);
/// f == 1 on the given base.
CircleCocycle trivial_cocycle(const BaseSystem& sys);

bool is_continuous(const UnimodularFunction& u);

complex evaluate(const BaseSystem& sys, const UnimodularFunction& u, const BasePoint& x);

/// u^n pointwise (n may be negative).
UnimodularFunction power(const UnimodularFunction& u, std::int64_t n);
UnimodularFunction product(const UnimodularFunction& a, const UnimodularFunction& b);
/// c * u for unimodular c.
UnimodularFunction rotate(const UnimodularFunction& u, complex c);

/// Exact BaseFunction form when one exists: circle functions without oscillating phase,
/// continuous Z_inf sequences, every cyclic vector.
std::optional<BaseFunction> to_base_function(const UnimodularFunction& u);

/// Reference point used for normalizing solutions: t = 0, inf, or r = 0.
BasePoint reference_point(const BaseSystem& sys);

/// sup over `grid` of |a(x) - c b(x)| minimized over the scalar c = a(x0)/b(x0) at the
/// first grid point. Used for "equal up to a multiplicative scalar" checks.
double distance_up_to_scalar(const BaseSystem& sys, const UnimodularFunction& a,
                             const UnimodularFunction& b, const std::vector<BasePoint>& grid);

}  // namespace anzai
