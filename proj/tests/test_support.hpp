#pragma once

#include <cmath>
#include <vector>

#include "tmrat/random.hpp"
#include "tmrat/types.hpp"

namespace tmrat::testing {

inline double to_double(Real v) { return static_cast<double>(v); }

inline bool close(Complex a, Complex b, Real tol) { return std::abs(a - b) <= tol; }

// Random points of the disk |z| <= radius from a fixed seed.
inline std::vector<Complex> disk_points(std::size_t count, std::uint64_t seed, Real radius) {
  Rng rng(seed);
  std::vector<Complex> out(count);
  for (auto& z : out) z = rng.point_in_disk(radius);
  return out;
}

}  // namespace tmrat::testing
