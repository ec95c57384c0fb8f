#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "anzai/exact.hpp"
#include "anzai/laurent.hpp"

namespace anzai {

/// Default bound on |frequency| produced by products of circle functions.
inline constexpr int kDefaultFrequencyCap = 4096;

enum class BaseKind { kCircle, kZInf, kCyclic };

const char* to_string(BaseKind kind);

// ---------------------------------------------------------------------------
// Points

/// Angle as a fraction of a full turn, kept in [0, 1).
struct CirclePoint {
  double t = 0.0;
};

/// An element of Z u {inf}; `l == nullopt` is the point at infinity.
struct ZInfPoint {
  std::optional<std::int64_t> l;

  bool is_infinity() const { return !l.has_value(); }
};

struct CyclicPoint {
  std::int64_t r = 0;
};

using BasePoint = std::variant<CirclePoint, ZInfPoint, CyclicPoint>;

BasePoint circle_point(double t);
BasePoint zinf_point(std::int64_t l);
BasePoint zinf_infinity();
BasePoint cyclic_point(std::int64_t r);

BaseKind kind_of(const BasePoint& x);

// ---------------------------------------------------------------------------
// Functions on the base

/// sum_j c_j e^{2 pi i j t}
struct CircleFn {
  LaurentPoly coeffs;
};

/// values[i] at l = window_start + i; every other integer and infinity take `limit`.
struct ZInfFn {
  std::int64_t window_start = 0;
  std::vector<complex> values;
  complex limit{};

  complex at(std::int64_t l) const;
  std::int64_t window_end() const { return window_start + static_cast<std::int64_t>(values.size()); }
};

struct CyclicFn {
  std::vector<complex> values;
};

using BaseFunction = std::variant<CircleFn, ZInfFn, CyclicFn>;

BaseKind kind_of(const BaseFunction& g);

// ---------------------------------------------------------------------------
// Systems

/// t -> t + alpha mod 1 with Lebesgue measure.
struct CircleRotation {
  double alpha = 0.0;
  std::optional<ExactReal> alpha_exact;
};

/// l -> l + 1, inf fixed, invariant measure the point mass at inf.
struct ZInfShift {};

/// r -> r + 1 mod n, uniform measure.
struct CyclicShift {
  std::int64_t n = 1;
};

using BaseSystem = std::variant<CircleRotation, ZInfShift, CyclicShift>;

/// Validating constructors. Circle rotation needs alpha in (0, 1); an exact tag, when
/// given, must carry a nonzero irrational part and agree with `alpha` to 1e-12.
BaseSystem make_circle_rotation(double alpha, std::optional<ExactReal> exact = std::nullopt);
BaseSystem make_circle_rotation(const ExactReal& exact);
BaseSystem make_zinf_shift();
BaseSystem make_cyclic_shift(std::int64_t n);

BaseKind kind_of(const BaseSystem& sys);

/// Throws VARIANT_MISMATCH unless the point lives in the system's space (including
/// the residue range for cyclic shifts).
void check_point(const BaseSystem& sys, const BasePoint& x);
void check_function(const BaseSystem& sys, const BaseFunction& g);

// ---------------------------------------------------------------------------
// Operations

BasePoint apply_theta(const BaseSystem& sys, const BasePoint& x);

/// Exact representation of g o theta.
BaseFunction pullback(const BaseSystem& sys, const BaseFunction& g);

/// Integral against the unique invariant measure.
complex integrate(const BaseSystem& sys, const BaseFunction& g);

complex evaluate_base(const BaseSystem& sys, const BaseFunction& g, const BasePoint& x);

// Algebra of base functions. Binary operations require matching variants.

BaseFunction constant_function(const BaseSystem& sys, complex c);
BaseFunction add(const BaseFunction& a, const BaseFunction& b);
BaseFunction scale(const BaseFunction& a, complex s);
/// Pointwise product. Circle products whose frequencies exceed `frequency_cap` throw
/// FREQUENCY_CAP instead of truncating.
BaseFunction multiply(const BaseFunction& a, const BaseFunction& b,
                      int frequency_cap = kDefaultFrequencyCap);
BaseFunction conjugate(const BaseFunction& a);

/// True when every stored coefficient / value is exactly zero.
bool is_zero(const BaseFunction& g);

/// Sup-distance between representations (coefficients for circle functions, values
/// over the union of windows plus the limit for Z_inf functions).
double function_distance(const BaseFunction& a, const BaseFunction& b);

}  // namespace anzai
