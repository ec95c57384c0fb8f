#include "anzai/base_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

using detail::overloaded;

double reduce_unit(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorTag::kVariantMismatch, what);
}

void require_same_kind(const BaseFunction& a, const BaseFunction& b) {
  if (a.index() != b.index()) {
    mismatch(std::string("base functions of kinds ") + to_string(kind_of(a)) + " and " +
             to_string(kind_of(b)));
  }
}

// Both Z_inf functions expanded onto a common window.
struct AlignedZInf {
  std::int64_t start;
  std::vector<complex> a;
  std::vector<complex> b;
};

AlignedZInf align(const ZInfFn& a, const ZInfFn& b) {
  const bool a_empty = a.values.empty();
  const bool b_empty = b.values.empty();
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (a_empty && b_empty) {
    lo = hi = 0;
  } else if (a_empty) {
    lo = b.window_start;
    hi = b.window_end();
  } else if (b_empty) {
    lo = a.window_start;
    hi = a.window_end();
  } else {
    lo = std::min(a.window_start, b.window_start);
    hi = std::max(a.window_end(), b.window_end());
  }
  AlignedZInf out{lo, {}, {}};
  out.a.reserve(static_cast<std::size_t>(hi - lo));
  out.b.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t l = lo; l < hi; ++l) {
    out.a.push_back(a.at(l));
    out.b.push_back(b.at(l));
  }
  return out;
}

const CyclicShift& as_cyclic(const BaseSystem& sys) { return std::get<CyclicShift>(sys); }

}  // namespace

const char* to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::kCircle: return "circle";
    case BaseKind::kZInf: return "zinf";
    case BaseKind::kCyclic: return "cyclic";
  }
  return "?";
}

BasePoint circle_point(double t) { return CirclePoint{reduce_unit(t)}; }
BasePoint zinf_point(std::int64_t l) { return ZInfPoint{l}; }
BasePoint zinf_infinity() { return ZInfPoint{std::nullopt}; }
BasePoint cyclic_point(std::int64_t r) { return CyclicPoint{r}; }

BaseKind kind_of(const BasePoint& x) { return static_cast<BaseKind>(x.index()); }
BaseKind kind_of(const BaseFunction& g) { return static_cast<BaseKind>(g.index()); }
BaseKind kind_of(const BaseSystem& sys) { return static_cast<BaseKind>(sys.index()); }

complex ZInfFn::at(std::int64_t l) const {
  if (l < window_start || l >= window_end()) return limit;
  return values[static_cast<std::size_t>(l - window_start)];
}

BaseSystem make_circle_rotation(double alpha, std::optional<ExactReal> exact) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorTag::kInvalidArgument, "rotation number must lie in (0, 1)");
  }
  if (exact) {
    if (exact->irrational_coeff.is_zero()) {
      throw Error(ErrorTag::kInvalidArgument,
                  "exact rotation number has no irrational part; rational rotations are "
                  "not uniquely ergodic");
    }
    if (std::abs(exact->value() - alpha) > 1e-12) {
      throw Error(ErrorTag::kInvalidArgument, "rotation number disagrees with its exact tag");
    }
  }
  return CircleRotation{alpha, std::move(exact)};
}

BaseSystem make_circle_rotation(const ExactReal& exact) {
  return make_circle_rotation(exact.value(), exact);
}

BaseSystem make_zinf_shift() { return ZInfShift{}; }

BaseSystem make_cyclic_shift(std::int64_t n) {
  if (n < 1) throw Error(ErrorTag::kInvalidArgument, "cyclic shift needs N >= 1");
  return CyclicShift{n};
}

void check_point(const BaseSystem& sys, const BasePoint& x) {
  if (sys.index() != x.index()) {
    mismatch(std::string("point of kind ") + to_string(kind_of(x)) + " on a " +
             to_string(kind_of(sys)) + " base");
  }
  if (const auto* c = std::get_if<CyclicPoint>(&x)) {
    const auto n = as_cyclic(sys).n;
    if (c->r < 0 || c->r >= n) mismatch("cyclic residue outside [0, N)");
  }
  if (const auto* c = std::get_if<CirclePoint>(&x)) {
    if (!(c->t >= 0.0 && c->t < 1.0)) mismatch("circle coordinate outside [0, 1)");
  }
}

void check_function(const BaseSystem& sys, const BaseFunction& g) {
  if (sys.index() != g.index()) {
    mismatch(std::string("function of kind ") + to_string(kind_of(g)) + " on a " +
             to_string(kind_of(sys)) + " base");
  }
  if (const auto* c = std::get_if<CyclicFn>(&g)) {
    if (static_cast<std::int64_t>(c->values.size()) != as_cyclic(sys).n) {
      mismatch("cyclic function length differs from N");
    }
  }
}

BasePoint apply_theta(const BaseSystem& sys, const BasePoint& x) {
  check_point(sys, x);
  return std::visit(
      overloaded{
          [&](const CircleRotation& rot) -> BasePoint {
            return circle_point(std::get<CirclePoint>(x).t + rot.alpha);
          },
          [&](const ZInfShift&) -> BasePoint {
            const auto& p = std::get<ZInfPoint>(x);
            return p.is_infinity() ? zinf_infinity() : zinf_point(*p.l + 1);
          },
          [&](const CyclicShift& cyc) -> BasePoint {
            return cyclic_point((std::get<CyclicPoint>(x).r + 1) % cyc.n);
          },
      },
      sys);
}

BaseFunction pullback(const BaseSystem& sys, const BaseFunction& g) {
  check_function(sys, g);
  return std::visit(
      overloaded{
          [&](const CircleRotation& rot) -> BaseFunction {
            CircleFn out;
            for (const auto& [j, c] : std::get<CircleFn>(g).coeffs.coeffs()) {
              out.coeffs.set(j, c * turn(static_cast<double>(j) * rot.alpha));
            }
            return out;
          },
          [&](const ZInfShift&) -> BaseFunction {
            ZInfFn out = std::get<ZInfFn>(g);
            out.window_start -= 1;
            return out;
          },
          [&](const CyclicShift& cyc) -> BaseFunction {
            const auto& in = std::get<CyclicFn>(g).values;
            CyclicFn out;
            out.values.resize(in.size());
            for (std::int64_t r = 0; r < cyc.n; ++r) {
              out.values[static_cast<std::size_t>(r)] = in[static_cast<std::size_t>((r + 1) % cyc.n)];
            }
            return out;
          },
      },
      sys);
}

complex integrate(const BaseSystem& sys, const BaseFunction& g) {
  check_function(sys, g);
  return std::visit(overloaded{
                        [](const CircleFn& f) { return f.coeffs.coeff(0); },
                        [](const ZInfFn& f) { return f.limit; },
                        [](const CyclicFn& f) {
                          complex sum{};
                          for (const auto& v : f.values) sum += v;
                          return sum / static_cast<double>(f.values.size());
                        },
                    },
                    g);
}

complex evaluate_base(const BaseSystem& sys, const BaseFunction& g, const BasePoint& x) {
  check_function(sys, g);
  check_point(sys, x);
  return std::visit(overloaded{
                        [&](const CircleFn& f) {
                          const double t = std::get<CirclePoint>(x).t;
                          complex sum{};
                          for (const auto& [j, c] : f.coeffs.coeffs()) {
                            sum += c * turn(static_cast<double>(j) * t);
                          }
                          return sum;
                        },
                        [&](const ZInfFn& f) {
                          const auto& p = std::get<ZInfPoint>(x);
                          return p.is_infinity() ? f.limit : f.at(*p.l);
                        },
                        [&](const CyclicFn& f) {
                          return f.values[static_cast<std::size_t>(std::get<CyclicPoint>(x).r)];
                        },
                    },
                    g);
}

BaseFunction constant_function(const BaseSystem& sys, complex c) {
  return std::visit(overloaded{
                        [&](const CircleRotation&) -> BaseFunction {
                          return CircleFn{LaurentPoly::constant(c)};
                        },
                        [&](const ZInfShift&) -> BaseFunction { return ZInfFn{0, {}, c}; },
                        [&](const CyclicShift& cyc) -> BaseFunction {
                          return CyclicFn{std::vector<complex>(static_cast<std::size_t>(cyc.n), c)};
                        },
                    },
                    sys);
}

BaseFunction add(const BaseFunction& a, const BaseFunction& b) {
  require_same_kind(a, b);
  return std::visit(
      overloaded{
          [&](const CircleFn& x) -> BaseFunction {
            return CircleFn{x.coeffs + std::get<CircleFn>(b).coeffs};
          },
          [&](const ZInfFn& x) -> BaseFunction {
            const auto& y = std::get<ZInfFn>(b);
            auto al = align(x, y);
            for (std::size_t i = 0; i < al.a.size(); ++i) al.a[i] += al.b[i];
            return ZInfFn{al.start, std::move(al.a), x.limit + y.limit};
          },
          [&](const CyclicFn& x) -> BaseFunction {
            const auto& y = std::get<CyclicFn>(b);
            if (x.values.size() != y.values.size()) mismatch("cyclic lengths differ");
            CyclicFn out = x;
            for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += y.values[i];
            return out;
          },
      },
      a);
}

BaseFunction scale(const BaseFunction& a, complex s) {
  return std::visit(overloaded{
                        [&](const CircleFn& x) -> BaseFunction { return CircleFn{x.coeffs * s}; },
                        [&](const ZInfFn& x) -> BaseFunction {
                          ZInfFn out = x;
                          for (auto& v : out.values) v *= s;
                          out.limit *= s;
                          return out;
                        },
                        [&](const CyclicFn& x) -> BaseFunction {
                          CyclicFn out = x;
                          for (auto& v : out.values) v *= s;
                          return out;
                        },
                    },
                    a);
}

BaseFunction multiply(const BaseFunction& a, const BaseFunction& b, int frequency_cap) {
  require_same_kind(a, b);
  return std::visit(
      overloaded{
          [&](const CircleFn& x) -> BaseFunction {
            const auto& y = std::get<CircleFn>(b);
            CircleFn out{x.coeffs * y.coeffs};
            if (out.coeffs.degree() > frequency_cap) {
              throw Error(ErrorTag::kFrequencyCap,
                          "circle product reaches frequency " +
                              std::to_string(out.coeffs.degree()) + " above cap " +
                              std::to_string(frequency_cap));
            }
            return out;
          },
          [&](const ZInfFn& x) -> BaseFunction {
            const auto& y = std::get<ZInfFn>(b);
            auto al = align(x, y);
            for (std::size_t i = 0; i < al.a.size(); ++i) al.a[i] *= al.b[i];
            return ZInfFn{al.start, std::move(al.a), x.limit * y.limit};
          },
          [&](const CyclicFn& x) -> BaseFunction {
            const auto& y = std::get<CyclicFn>(b);
            if (x.values.size() != y.values.size()) mismatch("cyclic lengths differ");
            CyclicFn out = x;
            for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= y.values[i];
            return out;
          },
      },
      a);
}

BaseFunction conjugate(const BaseFunction& a) {
  return std::visit(overloaded{
                        [](const CircleFn& x) -> BaseFunction {
                          return CircleFn{x.coeffs.circle_conjugate()};
                        },
                        [](const ZInfFn& x) -> BaseFunction {
                          ZInfFn out = x;
                          for (auto& v : out.values) v = std::conj(v);
                          out.limit = std::conj(out.limit);
                          return out;
                        },
                        [](const CyclicFn& x) -> BaseFunction {
                          CyclicFn out = x;
                          for (auto& v : out.values) v = std::conj(v);
                          return out;
                        },
                    },
                    a);
}

bool is_zero(const BaseFunction& g) {
  return std::visit(overloaded{
                        [](const CircleFn& x) {
                          return std::all_of(x.coeffs.coeffs().begin(), x.coeffs.coeffs().end(),
                                             [](const auto& kv) { return kv.second == complex{}; });
                        },
                        [](const ZInfFn& x) {
                          return x.limit == complex{} &&
                                 std::all_of(x.values.begin(), x.values.end(),
                                             [](complex v) { return v == complex{}; });
                        },
                        [](const CyclicFn& x) {
                          return std::all_of(x.values.begin(), x.values.end(),
                                             [](complex v) { return v == complex{}; });
                        },
                    },
                    g);
}

double function_distance(const BaseFunction& a, const BaseFunction& b) {
  require_same_kind(a, b);
  return std::visit(
      overloaded{
          [&](const CircleFn& x) {
            return coefficient_distance(x.coeffs, std::get<CircleFn>(b).coeffs);
          },
          [&](const ZInfFn& x) {
            const auto& y = std::get<ZInfFn>(b);
            const auto al = align(x, y);
            double d = std::abs(x.limit - y.limit);
            for (std::size_t i = 0; i < al.a.size(); ++i) d = std::max(d, std::abs(al.a[i] - al.b[i]));
            return d;
          },
          [&](const CyclicFn& x) {
            const auto& y = std::get<CyclicFn>(b);
            if (x.values.size() != y.values.size()) mismatch("cyclic lengths differ");
            double d = 0.0;
            for (std::size_t i = 0; i < x.values.size(); ++i) {
              d = std::max(d, std::abs(x.values[i] - y.values[i]));
            }
            return d;
          },
      },
      a);
}

}  // namespace anzai
