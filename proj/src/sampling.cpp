#include "anzai/sampling.hpp"

#include <vector>

#include "anzai/detail/overloaded.hpp"

namespace anzai {

complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

BaseFunction random_base_function(const BaseSystem& sys, Rng& rng) {
  return std::visit(detail::overloaded{
                        [&](const CircleRotation&) -> BaseFunction {
                          LaurentPoly p;
                          for (int j = -2; j <= 2; ++j) p.set(j, random_complex(rng));
                          return CircleFn{p};
                        },
                        [&](const ZInfShift&) -> BaseFunction {
                          std::uniform_int_distribution<int> start(-4, 0);
                          std::uniform_int_distribution<int> len(0, 4);
                          ZInfFn f;
                          f.window_start = start(rng);
                          const int n = len(rng);
                          for (int i = 0; i < n; ++i) f.values.push_back(random_complex(rng));
                          f.limit = random_complex(rng);
                          return f;
                        },
                        [&](const CyclicShift& c) -> BaseFunction {
                          CyclicFn f;
                          for (std::int64_t r = 0; r < c.n; ++r) f.values.push_back(random_complex(rng));
                          return f;
                        },
                    },
                    sys);
}

TorusObservable random_observable(const BaseSystem& sys, Rng& rng, int degree) {
  TorusObservable h(kind_of(sys));
  for (int n = -degree; n <= degree; ++n) h.add_to(n, random_base_function(sys, rng));
  return h;
}

TorusObservable random_analytic_observable(const BaseSystem& sys, Rng& rng, int degree) {
  TorusObservable h(kind_of(sys));
  for (int n = 0; n <= degree; ++n) h.add_to(n, random_base_function(sys, rng));
  return h;
}

ExpectationMatrix random_expectation_matrix(int k, Rng& rng) {
  std::vector<complex> b(static_cast<std::size_t>(k * k));
  for (auto& v : b) v = random_complex(rng);
  std::vector<complex> a(b.size());
  double trace = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      complex s{};
      for (int r = 0; r < k; ++r) s += b[i * k + r] * std::conj(b[j * k + r]);
      a[i * k + j] = s;
    }
    trace += a[i * k + i].real();
  }
  for (auto& v : a) v /= trace;
  // Exact Hermitian symmetry and a real diagonal.
  for (int i = 0; i < k; ++i) {
    a[i * k + i] = a[i * k + i].real();
    for (int j = i + 1; j < k; ++j) a[j * k + i] = std::conj(a[i * k + j]);
  }
  return ExpectationMatrix::make(k, std::move(a));
}

}  // namespace anzai
