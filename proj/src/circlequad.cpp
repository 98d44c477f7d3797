#include "tmrat/circlequad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace tmrat {

bool Disk::admissible(Complex z) noexcept {
  return is_finite(z) && std::abs(z) < 1 - boundary_epsilon;
}

Disk::Disk(Complex z) : z_(z) {
  if (!admissible(z))
    throw OutsideDisk("point (" + std::to_string(double(z.real())) + ", " +
                      std::to_string(double(z.imag())) +
                      ") is not inside the unit disk by at least 1e-9");
}

CircleGrid::CircleGrid(std::size_t node_count) : weight_(0) {
  if (node_count == 0) throw InvalidArgument("circle grid needs at least one node");
  nodes_.resize(node_count);
  const Real step = 2 * pi / Real(node_count);
  for (std::size_t j = 0; j < node_count; ++j) {
    const Real theta = step * Real(j);
    nodes_[j] = Complex(std::cos(theta), std::sin(theta));
  }
  weight_ = Real(1) / Real(node_count);
}

const CircleGrid& shared_grid(std::size_t node_count) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<CircleGrid>> grids;
  const std::lock_guard lock(mutex);
  auto& slot = grids[node_count];
  if (!slot) slot = std::make_unique<CircleGrid>(node_count);
  return *slot;
}

std::size_t minimum_grid_size(Real rho, std::size_t floor_nodes) {
  std::size_t wanted = floor_nodes;
  if (rho > 0) {
    const Real needed = 2 * std::log(Real(1e-24)) / std::log(rho);
    if (needed > Real(max_grid_size)) {
      wanted = max_grid_size;
    } else {
      wanted = std::max<std::size_t>(wanted, static_cast<std::size_t>(std::ceil(needed)));
    }
  }
  std::size_t n = 1;
  while (n < wanted) n *= 2;
  return std::min(n, max_grid_size);
}

Real factorial(unsigned n) {
  if (n > 20) throw InvalidArgument("factorial argument " + std::to_string(n) + " exceeds 20");
  unsigned long long f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Real(f);
}

}  // namespace tmrat
