#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anzai/base_system.hpp"

namespace anzai {

/// h(x, z) = sum_n h_n(x) z^n with finitely many nonzero slots, all on one base kind.
/// Slots holding the exact zero function are dropped on insertion.
class TorusObservable {
 public:
  explicit TorusObservable(BaseKind kind) : kind_(kind) {}

  BaseKind kind() const { return kind_; }
  const std::map<int, BaseFunction>& slots() const { return slots_; }
  bool empty() const { return slots_.empty(); }
  /// nullptr when h_n is identically zero.
  const BaseFunction* slot(int n) const;
  /// max |n| over stored slots.
  int max_frequency() const;

  void set(int n, BaseFunction g);
  void add_to(int n, const BaseFunction& g);

 private:
  BaseKind kind_;
  std::map<int, BaseFunction> slots_;
};

TorusObservable make_observable(const BaseSystem& sys,
                                std::initializer_list<std::pair<int, BaseFunction>> slots);
TorusObservable constant_observable(const BaseSystem& sys, complex c);
/// g(x) z^n
TorusObservable monomial(const BaseSystem& sys, const BaseFunction& g, int n);
/// c z^n
TorusObservable character(const BaseSystem& sys, int n, complex c = 1.0);

TorusObservable add(const TorusObservable& a, const TorusObservable& b);
TorusObservable subtract(const TorusObservable& a, const TorusObservable& b);
TorusObservable scale(const TorusObservable& a, complex s);
/// Exact series product (convolution of slots). Throws FREQUENCY_CAP when a z- or
/// circle frequency exceeds `frequency_cap`.
TorusObservable multiply(const TorusObservable& a, const TorusObservable& b,
                         int frequency_cap = kDefaultFrequencyCap);
/// conj(h(x, z)) on X x T.
TorusObservable conjugate(const TorusObservable& a);
/// conj(p) * p, pointwise nonnegative by construction.
TorusObservable abs_squared(const TorusObservable& p, int frequency_cap = kDefaultFrequencyCap);

/// max over slots of the representation distance.
double observable_distance(const TorusObservable& a, const TorusObservable& b);

/// sum_{|n| <= M} (1 - |n|/(M+1)) h_n z^n
TorusObservable fejer_sum(const TorusObservable& h, int M);

/// Keeps the slots whose frequency is a multiple of n (n >= 1).
TorusObservable periodic_expectation(const TorusObservable& h, int n);

/// Rotation of the fiber by l/n of a turn: slot k picks up e^{2 pi i l k / n}.
TorusObservable dual_rotation(const TorusObservable& h, int n, int l);

/// sum_n h_n(x) z^n; z must be unimodular to 1e-12.
complex evaluate_torus(const BaseSystem& sys, const TorusObservable& h, const BasePoint& x,
                       complex z);

/// Integral against mu_o x Haar.
complex integrate_torus(const TorusObservable& h, const BaseSystem& sys);

/// Values of h on a base-point list times an equispaced z grid.
struct SampledTorusFunction {
  std::vector<BasePoint> xs;
  int z_size = 0;
  std::vector<complex> values;  // values[i * z_size + j] at (xs[i], z_node(j, z_size))

  complex at(std::size_t i, int j) const { return values[i * static_cast<std::size_t>(z_size) + j]; }
};

/// j-th point of the M-point equispaced grid on T.
complex z_node(int j, int M);

SampledTorusFunction sample(const BaseSystem& sys, const TorusObservable& h,
                            const std::vector<BasePoint>& xs, int z_size);

/// Trapezoid quadrature of the n-th z-Fourier coefficient at each sampled base point.
/// Requires z_size >= 2|n| + 2.
std::vector<complex> fourier_coefficient(const SampledTorusFunction& h, int n);

/// Columns: x_index,x,z_index,z_re,z_im,re,im
void write_csv(std::ostream& os, const SampledTorusFunction& h);

std::string format_point(const BasePoint& x);

}  // namespace anzai
