#pragma once

#include <cstdint>
#include <random>

#include "tmrat/tm_basis.hpp"
#include "tmrat/types.hpp"

namespace tmrat {

// Seeded mt19937_64 with distribution transforms written out here, so that
// draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform on [0, 1) with 53 random bits.
  Real uniform();
  // Standard normal (Box-Muller, one value per call).
  Real normal();
  // Circular complex normal with E|z|^2 = 1.
  Complex complex_normal();
  // Uniform in the disk |z| <= radius.
  Complex point_in_disk(Real radius);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

PoleSequence random_poles(std::size_t count, std::uint64_t seed, Real max_modulus);

}  // namespace tmrat
