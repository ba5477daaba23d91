#include "kmalg/random.hpp"

#include <algorithm>

namespace kmalg::rnd {

Rational rational(Engine& rng, int max_num, int max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, std::max(max_den, 1));
  long n = num(rng);
  long d = den(rng);
  return Rational(n, d);
}

Poly poly(Engine& rng, int max_degree) {
  if (max_degree < 0) return {};
  std::vector<Rational> c(static_cast<size_t>(max_degree) + 1);
  for (auto& v : c) v = rational(rng);
  return Poly(std::move(c));
}

GluedFunction glued(Engine& rng, SpaceSpec space, int max_degree) {
  const int m = space.contact_order();
  Poly f = poly(rng, std::max(max_degree, m));
  Poly common = hadamard_split(f, m + 1).head;
  Poly g = common + poly(rng, max_degree - m - 1).shift(m + 1);
  return make_glued(std::move(f), std::move(g), space);
}

}  // namespace kmalg::rnd
