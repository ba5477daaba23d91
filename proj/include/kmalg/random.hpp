#pragma once

#include <random>

#include "kmalg/glued.hpp"

namespace kmalg::rnd {

using Engine = std::mt19937_64;

/// Uniform numerator in [-max_num, max_num] over a denominator in [1, max_den].
Rational rational(Engine& rng, int max_num = 5, int max_den = 3);

/// Dense polynomial with each coefficient drawn by rational(); degree <= max_degree.
/// Negative max_degree yields the zero polynomial.
Poly poly(Engine& rng, int max_degree);

/// Random element of A = C^inf(K_m) with branch degrees <= max(max_degree, m).
GluedFunction glued(Engine& rng, SpaceSpec space, int max_degree);

}  // namespace kmalg::rnd
