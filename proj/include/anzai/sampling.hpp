#pragma once

#include <cstdint>
#include <random>

#include "anzai/expectations.hpp"

namespace anzai {

using Rng = std::mt19937_64;

/// Complex number with real and imaginary parts uniform in [-1, 1].
complex random_complex(Rng& rng);

/// Random base function: circle frequencies in [-2, 2], a Z_inf window inside
/// [-4, 4] with a random limit, or a random cyclic vector.
BaseFunction random_base_function(const BaseSystem& sys, Rng& rng);

/// Random observable with z-frequencies in [-degree, degree].
TorusObservable random_observable(const BaseSystem& sys, Rng& rng, int degree);

/// Random analytic polynomial sum_{n=0}^{degree} g_n(x) z^n.
TorusObservable random_analytic_observable(const BaseSystem& sys, Rng& rng, int degree);

/// B B^* / Tr(B B^*) for a random complex k x k matrix B.
ExpectationMatrix random_expectation_matrix(int k, Rng& rng);

}  // namespace anzai
