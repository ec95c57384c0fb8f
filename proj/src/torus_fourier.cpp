#include "anzai/torus_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

#include "anzai/detail/format.hpp"
#include "anzai/detail/overloaded.hpp"
#include "anzai/error.hpp"

namespace anzai {

namespace {

void require_same_kind(const TorusObservable& a, const TorusObservable& b) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorTag::kVariantMismatch, std::string("observables over ") +
                                                to_string(a.kind()) + " and " +
                                                to_string(b.kind()));
  }
}

}  // namespace

const BaseFunction* TorusObservable::slot(int n) const {
  const auto it = slots_.find(n);
  return it == slots_.end() ? nullptr : &it->second;
}

int TorusObservable::max_frequency() const {
  if (slots_.empty()) return 0;
  return std::max(std::abs(slots_.begin()->first), std::abs(slots_.rbegin()->first));
}

void TorusObservable::set(int n, BaseFunction g) {
  if (kind_of(g) != kind_) {
    throw Error(ErrorTag::kVariantMismatch, std::string("slot of kind ") + to_string(kind_of(g)) +
                                                " in an observable over " + to_string(kind_));
  }
  if (is_zero(g)) {
    slots_.erase(n);
  } else {
    slots_.insert_or_assign(n, std::move(g));
  }
}

void TorusObservable::add_to(int n, const BaseFunction& g) {
  const auto* cur = slot(n);
  set(n, cur ? add(*cur, g) : g);
}

TorusObservable make_observable(const BaseSystem& sys,
                                std::initializer_list<std::pair<int, BaseFunction>> slots) {
  TorusObservable h(kind_of(sys));
  for (const auto& [n, g] : slots) {
    check_function(sys, g);
    h.add_to(n, g);
  }
  return h;
}

TorusObservable constant_observable(const BaseSystem& sys, complex c) {
  return character(sys, 0, c);
}

TorusObservable monomial(const BaseSystem& sys, const BaseFunction& g, int n) {
  return make_observable(sys, {{n, g}});
}

TorusObservable character(const BaseSystem& sys, int n, complex c) {
  return monomial(sys, constant_function(sys, c), n);
}

TorusObservable add(const TorusObservable& a, const TorusObservable& b) {
  require_same_kind(a, b);
  TorusObservable out = a;
  for (const auto& [n, g] : b.slots()) out.add_to(n, g);
  return out;
}

TorusObservable subtract(const TorusObservable& a, const TorusObservable& b) {
  return add(a, scale(b, -1.0));
}

TorusObservable scale(const TorusObservable& a, complex s) {
  TorusObservable out(a.kind());
  for (const auto& [n, g] : a.slots()) out.set(n, scale(g, s));
  return out;
}

TorusObservable multiply(const TorusObservable& a, const TorusObservable& b, int frequency_cap) {
  require_same_kind(a, b);
  TorusObservable out(a.kind());
  for (const auto& [i, x] : a.slots()) {
    for (const auto& [j, y] : b.slots()) {
      if (std::abs(i + j) > frequency_cap) {
        throw Error(ErrorTag::kFrequencyCap, "z-frequency " + std::to_string(i + j) +
                                                 " above cap " + std::to_string(frequency_cap));
      }
      out.add_to(i + j, multiply(x, y, frequency_cap));
    }
  }
  return out;
}

TorusObservable conjugate(const TorusObservable& a) {
  TorusObservable out(a.kind());
  for (const auto& [n, g] : a.slots()) out.set(-n, conjugate(g));
  return out;
}

TorusObservable abs_squared(const TorusObservable& p, int frequency_cap) {
  return multiply(conjugate(p), p, frequency_cap);
}

double observable_distance(const TorusObservable& a, const TorusObservable& b) {
  require_same_kind(a, b);
  double d = 0.0;
  for (const auto& [n, g] : a.slots()) {
    const auto* other = b.slot(n);
    d = std::max(d, other ? function_distance(g, *other) : function_distance(g, scale(g, 0.0)));
  }
  for (const auto& [n, g] : b.slots()) {
    if (!a.slot(n)) d = std::max(d, function_distance(g, scale(g, 0.0)));
  }
  return d;
}

TorusObservable fejer_sum(const TorusObservable& h, int M) {
  if (M < 0) throw Error(ErrorTag::kInvalidArgument, "Fejer order must be >= 0");
  TorusObservable out(h.kind());
  for (const auto& [n, g] : h.slots()) {
    if (std::abs(n) > M) continue;
    const double w = 1.0 - static_cast<double>(std::abs(n)) / static_cast<double>(M + 1);
    out.set(n, w == 1.0 ? g : scale(g, w));
  }
  return out;
}

TorusObservable periodic_expectation(const TorusObservable& h, int n) {
  if (n < 1) throw Error(ErrorTag::kInvalidArgument, "periodic expectation needs n >= 1");
  TorusObservable out(h.kind());
  for (const auto& [k, g] : h.slots()) {
    if (k % n == 0) out.set(k, g);
  }
  return out;
}

TorusObservable dual_rotation(const TorusObservable& h, int n, int l) {
  if (n < 1) throw Error(ErrorTag::kInvalidArgument, "dual rotation needs n >= 1");
  TorusObservable out(h.kind());
  for (const auto& [k, g] : h.slots()) {
    // Phase reduced exactly before the transcendental call; integer multiples of a
    // full turn give exactly 1.
    const long long num = (static_cast<long long>(l) * k) % n;
    out.set(k, num == 0 ? g : scale(g, turn(static_cast<double>(num) / n)));
  }
  return out;
}

complex evaluate_torus(const BaseSystem& sys, const TorusObservable& h, const BasePoint& x,
                       complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) {
    throw Error(ErrorTag::kNotUnimodular, "fiber coordinate is not on the unit circle");
  }
  if (h.kind() != kind_of(sys)) {
    throw Error(ErrorTag::kVariantMismatch, "observable and system kinds differ");
  }
  complex sum{};
  for (const auto& [n, g] : h.slots()) sum += evaluate_base(sys, g, x) * ipow(z, n);
  return sum;
}

complex integrate_torus(const TorusObservable& h, const BaseSystem& sys) {
  if (h.kind() != kind_of(sys)) {
    throw Error(ErrorTag::kVariantMismatch, "observable and system kinds differ");
  }
  const auto* h0 = h.slot(0);
  return h0 ? integrate(sys, *h0) : complex{};
}

complex z_node(int j, int M) {
  // Quarter turns hit exactly.
  if ((4 * static_cast<long long>(j)) % M == 0) {
    switch (((4 * static_cast<long long>(j)) / M) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return turn(static_cast<double>(j) / M);
}

SampledTorusFunction sample(const BaseSystem& sys, const TorusObservable& h,
                            const std::vector<BasePoint>& xs, int z_size) {
  if (z_size < 1) throw Error(ErrorTag::kInvalidArgument, "z grid must be nonempty");
  SampledTorusFunction out{xs, z_size, {}};
  out.values.reserve(xs.size() * static_cast<std::size_t>(z_size));
  for (const auto& x : xs) {
    for (int j = 0; j < z_size; ++j) out.values.push_back(evaluate_torus(sys, h, x, z_node(j, z_size)));
  }
  return out;
}

std::vector<complex> fourier_coefficient(const SampledTorusFunction& h, int n) {
  if (h.z_size < 2 * std::abs(n) + 2) {
    throw Error(ErrorTag::kGridTooSmall, "z grid of " + std::to_string(h.z_size) +
                                             " points cannot resolve frequency " +
                                             std::to_string(n));
  }
  std::vector<complex> out;
  out.reserve(h.xs.size());
  for (std::size_t i = 0; i < h.xs.size(); ++i) {
    complex sum{};
    for (int j = 0; j < h.z_size; ++j) sum += h.at(i, j) * std::conj(ipow(z_node(j, h.z_size), n));
    out.push_back(sum / static_cast<double>(h.z_size));
  }
  return out;
}

std::string format_point(const BasePoint& x) {
  return std::visit(detail::overloaded{
                        [](const CirclePoint& p) { return detail::format_double(p.t); },
                        [](const ZInfPoint& p) {
                          return p.is_infinity() ? std::string("inf") : std::to_string(*p.l);
                        },
                        [](const CyclicPoint& p) { return std::to_string(p.r); },
                    },
                    x);
}

void write_csv(std::ostream& os, const SampledTorusFunction& h) {
  using detail::format_double;
  os << "x_index,x,z_index,z_re,z_im,re,im\n";
  for (std::size_t i = 0; i < h.xs.size(); ++i) {
    for (int j = 0; j < h.z_size; ++j) {
      const complex z = z_node(j, h.z_size);
      const complex v = h.at(i, j);
      os << i << ',' << format_point(h.xs[i]) << ',' << j << ',' << format_double(z.real()) << ','
         << format_double(z.imag()) << ',' << format_double(v.real()) << ','
         << format_double(v.imag()) << '\n';
    }
  }
}

}  // namespace anzai
