#include "tmrat/random.hpp"

#include <cmath>

namespace tmrat {

Real Rng::uniform() {
  return Real(engine_() >> 11) * Real(1.0 / 9007199254740992.0);
}

Real Rng::normal() {
  Real u = uniform();
  while (u == 0) u = uniform();
  const Real v = uniform();
  return std::sqrt(-2 * std::log(u)) * std::cos(2 * pi * v);
}

Complex Rng::complex_normal() {
  const Real re = normal();
  const Real im = normal();
  return Complex(re, im) / std::sqrt(Real(2));
}

Complex Rng::point_in_disk(Real radius) {
  const Real r = radius * std::sqrt(uniform());
  const Real theta = 2 * pi * uniform();
  return Complex(r * std::cos(theta), r * std::sin(theta));
}

PoleSequence random_poles(std::size_t count, std::uint64_t seed, Real max_modulus) {
  Rng rng(seed);
  std::vector<Complex> points(count);
  for (auto& p : points) p = rng.point_in_disk(max_modulus);
  return PoleSequence(std::move(points));
}

}  // namespace tmrat
