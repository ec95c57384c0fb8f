#include "anzai/skew_product.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anzai/detail/parallel.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(complex v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

/// Walks the orbit of (x, z) under Phi.
class OrbitWalker {
 public:
  OrbitWalker(const SkewSystem& sys, const BasePoint& x, complex z) : sys_(sys), x_(x), z_(z) {
    if (const auto* c = std::get_if<CirclePoint>(&x)) {
      t0_ = c->t;
      alpha_ = std::get<CircleRotation>(sys.base).alpha;
      circle_ = true;
    }
  }

  const BasePoint& x() const { return x_; }
  complex z() const { return z_; }

  void step() {
    z_ *= evaluate(sys_.base, sys_.cocycle, x_);
    z_ /= std::abs(z_);
    ++k_;
    if (circle_) {
      // Recomputed from the start point so rotation error does not accumulate.
      x_ = circle_point(t0_ + static_cast<double>(k_) * alpha_);
    } else {
      x_ = apply_theta(sys_.base, x_);
    }
  }

 private:
  const SkewSystem& sys_;
  BasePoint x_;
  complex z_;
  std::int64_t k_ = 0;
  double t0_ = 0.0;
  double alpha_ = 0.0;
  bool circle_ = false;
};

}  // namespace

SkewSystem make_skew_system(BaseSystem base, CircleCocycle cocycle) {
  if (base.index() != cocycle.index()) {
    throw Error(ErrorTag::kVariantMismatch, std::string("cocycle of kind ") +
                                                to_string(kind_of(cocycle)) + " over a " +
                                                to_string(kind_of(base)) + " base");
  }
  if (!is_continuous(cocycle)) {
    throw Error(ErrorTag::kInvalidArgument, "cocycle must be continuous");
  }
  if (const auto* c = std::get_if<CyclicUnimodular>(&cocycle)) {
    if (static_cast<std::int64_t>(c->values.size()) != std::get<CyclicShift>(base).n) {
      throw Error(ErrorTag::kVariantMismatch, "cyclic cocycle length differs from N");
    }
  }
  return SkewSystem{std::move(base), std::move(cocycle)};
}

std::pair<BasePoint, complex> apply_skew(const SkewSystem& sys, const BasePoint& x, complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) {
    throw Error(ErrorTag::kNotUnimodular, "fiber coordinate is not on the unit circle");
  }
  const complex fz = evaluate(sys.base, sys.cocycle, x) * z;
  return {apply_theta(sys.base, x), fz};
}

BaseFunction cocycle_power_function(const SkewSystem& sys, std::int64_t n) {
  auto g = to_base_function(power(sys.cocycle, n));
  if (!g) {
    throw Error(ErrorTag::kNotRepresentable,
                "cocycle power has no exact base representation (oscillating phase)");
  }
  return *g;
}

TorusObservable koopman(const SkewSystem& sys, const TorusObservable& h, int frequency_cap) {
  if (h.kind() != kind_of(sys.base)) {
    throw Error(ErrorTag::kVariantMismatch, "observable and system kinds differ");
  }
  TorusObservable out(h.kind());
  for (const auto& [n, g] : h.slots()) {
    auto moved = pullback(sys.base, g);
    if (n != 0) moved = multiply(moved, cocycle_power_function(sys, n), frequency_cap);
    out.set(n, std::move(moved));
  }
  return out;
}

complex cocycle_product(const SkewSystem& sys, const BasePoint& x, std::int64_t n) {
  if (n < 0) throw Error(ErrorTag::kInvalidArgument, "cocycle product needs n >= 0");
  OrbitWalker walker(sys, x, 1.0);
  for (std::int64_t k = 0; k < n; ++k) walker.step();
  return walker.z();
}

TorusObservable cesaro_average(const SkewSystem& sys, const TorusObservable& h, std::int64_t N,
                               int frequency_cap) {
  if (N < 1) throw Error(ErrorTag::kInvalidArgument, "Cesaro average needs N >= 1");
  TorusObservable sum = h;
  TorusObservable term = h;
  for (std::int64_t k = 1; k < N; ++k) {
    term = koopman(sys, term, frequency_cap);
    sum = add(sum, term);
  }
  return scale(sum, 1.0 / static_cast<double>(N));
}

std::vector<complex> birkhoff_averages(const SkewSystem& sys, const TorusObservable& h,
                                       const BasePoint& x, complex z,
                                       const std::vector<std::int64_t>& schedule) {
  if (schedule.empty()) return {};
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw Error(ErrorTag::kInvalidArgument, "schedule must be strictly increasing and >= 1");
    }
  }
  if (std::abs(std::abs(z) - 1.0) > 1e-12) {
    throw Error(ErrorTag::kNotUnimodular, "fiber coordinate is not on the unit circle");
  }
  check_point(sys.base, x);
  std::vector<complex> out;
  out.reserve(schedule.size());
  CompensatedSum sum;
  OrbitWalker walker(sys, x, z);
  std::size_t next = 0;
  for (std::int64_t k = 0; k < schedule.back(); ++k) {
    sum.add(evaluate_torus(sys.base, h, walker.x(), walker.z()));
    if (k + 1 == schedule[next]) {
      out.push_back(sum.value() / static_cast<double>(k + 1));
      ++next;
    }
    walker.step();
  }
  return out;
}

complex birkhoff_average(const SkewSystem& sys, const TorusObservable& h, const BasePoint& x,
                         complex z, std::int64_t N) {
  if (N < 1) throw Error(ErrorTag::kInvalidArgument, "Birkhoff average needs N >= 1");
  return birkhoff_averages(sys, h, x, z, {N}).front();
}

const char* to_string(DiagnosticStatus s) {
  return s == DiagnosticStatus::kConverging ? "CONVERGING" : "NONCONVERGING";
}

DiagnosticReport ue_diagnostic(const SkewSystem& sys, const TorusObservable& h,
                               const std::vector<std::int64_t>& schedule,
                               const std::vector<BasePoint>& xs, int z_size,
                               const DiagnosticOptions& options) {
  if (schedule.size() < 2) {
    throw Error(ErrorTag::kInvalidArgument, "diagnostic needs at least two schedule entries");
  }
  if (xs.empty() || z_size < 1) throw Error(ErrorTag::kInvalidArgument, "empty grid");
  const std::size_t points = xs.size() * static_cast<std::size_t>(z_size);
  std::vector<std::vector<complex>> averages(points);
  detail::parallel_for(points, [&](std::size_t p) {
    const auto& x = xs[p / static_cast<std::size_t>(z_size)];
    const complex z = z_node(static_cast<int>(p % static_cast<std::size_t>(z_size)), z_size);
    averages[p] = birkhoff_averages(sys, h, x, z, schedule);
  });

  DiagnosticReport report;
  for (std::size_t s = 1; s < schedule.size(); ++s) {
    double sup = 0.0;
    for (const auto& a : averages) sup = std::max(sup, std::abs(a[s] - a[s - 1]));
    report.rows.push_back({schedule[s - 1], schedule[s], sup});
  }
  report.threshold =
      options.threshold_scale / std::sqrt(static_cast<double>(schedule.back()));
  report.status = report.rows.back().sup_difference < report.threshold
                      ? DiagnosticStatus::kConverging
                      : DiagnosticStatus::kNonConverging;
  return report;
}

}  // namespace anzai
