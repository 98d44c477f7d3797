#pragma once

// Trapezoid quadrature on the unit circle against normalized arc length, and
// Cauchy-integral derivatives of functions analytic on a disk about a point.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tmrat/errors.hpp"
#include "tmrat/types.hpp"

namespace tmrat {

// Points at or beyond this distance from the circle are refused as disk points.
inline constexpr Real boundary_epsilon = 1e-9L;

inline constexpr std::size_t default_grid_size = 4096;
inline constexpr std::size_t max_grid_size = std::size_t{1} << 20;

// A point of the open unit disk, kept at least boundary_epsilon away from T.
class Disk {
 public:
  explicit Disk(Complex z);
  Disk(Real re, Real im = 0) : Disk(Complex(re, im)) {}

  Complex value() const noexcept { return z_; }
  Real modulus() const noexcept { return std::abs(z_); }
  operator Complex() const noexcept { return z_; }

  static bool admissible(Complex z) noexcept;

 private:
  Complex z_;
};

// N equispaced nodes exp(2 pi i j / N), each with weight 1/N.
class CircleGrid {
 public:
  explicit CircleGrid(std::size_t node_count = default_grid_size);

  std::size_t size() const noexcept { return nodes_.size(); }
  Real weight() const noexcept { return weight_; }
  Complex node(std::size_t j) const { return nodes_[j]; }
  std::span<const Complex> nodes() const noexcept { return nodes_; }

 private:
  std::vector<Complex> nodes_;
  Real weight_;
};

// Neumaier-compensated accumulator; the summation order is the call order.
class CompensatedSum {
 public:
  void add(Complex v) noexcept {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  Complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(Real& sum, Real& comp, Real x) noexcept {
    const Real t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  Real re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

inline bool is_finite(Complex v) noexcept {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// (1/N) sum_j f(t_j).
template <class F>
Complex integrate_circle(F&& f, const CircleGrid& grid) {
  CompensatedSum sum;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex v = f(grid.node(j));
    if (!is_finite(v)) throw NonFiniteIntegrand(j);
    sum.add(v);
  }
  return sum.value() * grid.weight();
}

// Process-wide grid of the given size, built on first use and never freed.
const CircleGrid& shared_grid(std::size_t node_count);

struct AdaptiveIntegral {
  Complex value;
  std::size_t node_count;
};

// Doubles N from start_nodes until two successive rules agree to rel_tol.
template <class F>
AdaptiveIntegral integrate_circle_adaptive(F&& f, std::size_t start_nodes = default_grid_size,
                                           Real rel_tol = 1e-12L,
                                           std::size_t max_nodes = max_grid_size) {
  std::size_t n = start_nodes;
  Complex previous = integrate_circle(f, shared_grid(n));
  while (n < max_nodes) {
    n *= 2;
    const Complex current = integrate_circle(f, shared_grid(n));
    if (std::abs(current - previous) <= rel_tol * std::abs(current)) return {current, n};
    previous = current;
  }
  throw AccuracyNotReached("circle quadrature did not converge within " +
                           std::to_string(max_nodes) + " nodes");
}

// Smallest power-of-two node count, at least `floor_nodes`, for which rho^N
// drops below 1e-24 with a factor-two margin. rho bounds the moduli of the
// singularities inside the disk and the reflections of those outside it.
std::size_t minimum_grid_size(Real rho, std::size_t floor_nodes = default_grid_size);

// n! as an exact integer, n <= 20.
Real factorial(unsigned n);

// Radius used by derivative_at when none is given: half the distance to T.
inline Real default_derivative_radius(const Disk& a) { return (1 - a.modulus()) / 2; }

inline constexpr std::size_t default_derivative_nodes = 256;

// f^(order)(a) by the trapezoid rule on the Cauchy integral over |z - a| = radius.
template <class F>
Complex derivative_at(F&& f, const Disk& a, unsigned order,
                      std::optional<Real> radius = std::nullopt,
                      std::size_t node_count = default_derivative_nodes) {
  const Real rho = radius.value_or(default_derivative_radius(a));
  if (!(rho > 0) || rho >= 1 - a.modulus())
    throw RadiusEscapesDisk("derivative circle of radius " + std::to_string(double(rho)) +
                            " leaves the unit disk");
  const CircleGrid grid(node_count);
  const Complex center = a.value();
  CompensatedSum sum;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex offset = rho * grid.node(j);
    const Complex v = f(center + offset);
    if (!is_finite(v)) throw NonFiniteIntegrand(j);
    Complex scale = 1;
    for (unsigned k = 0; k < order; ++k) scale *= offset;
    sum.add(v / scale);
  }
  return factorial(order) * sum.value() * grid.weight();
}

}  // namespace tmrat
