#pragma once

// Brute-force checks of the closed-form minima that do not go through the
// closed forms: discrete least squares over R(n), random competitor scans for
// the uniform problem, and an exhaustive parameter grid on the smallest case.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tmrat/bergman_approx.hpp"
#include "tmrat/expansion.hpp"
#include "tmrat/random.hpp"

namespace tmrat {

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

// Minimize (1/N) sum_j |y_j - sum_m c_m phi_m(t_j)|^2 over the grid nodes t_j.
class LeastSquaresProblem {
 public:
  LeastSquaresProblem(const BoundaryFunction& target, const TMBasis& basis,
                      std::size_t grid_nodes = default_grid_size);
  LeastSquaresProblem(const KernelSpec& spec, const TMBasis& basis,
                      std::size_t grid_nodes = default_grid_size);

  const ComplexMatrix& design() const noexcept { return design_; }
  const ComplexVector& target() const noexcept { return target_; }
  std::size_t grid_nodes() const noexcept { return static_cast<std::size_t>(design_.rows()); }

 private:
  ComplexMatrix design_;
  ComplexVector target_;
};

struct LeastSquaresSolution {
  // Discrete inner products with the (orthonormal) columns.
  std::vector<Complex> coefficients;
  // Solution of the normal equations G c = A^H y / N.
  std::vector<Complex> normal_coefficients;
  Real minimum = 0;
  Real normal_minimum = 0;
  // max_m |coefficients[m] - normal_coefficients[m]|.
  Real route_gap = 0;
  // Eigenvalue ratio of the discrete Gram matrix A^H A / N.
  Real condition_number = 0;
  // max_m |(A^H (y - A c))_m| / N at the normal-equation solution.
  Real orthogonality_residual = 0;
};

// Throws IllConditioned when the discrete Gram matrix is singular or its
// condition number exceeds 1e8.
LeastSquaresSolution lsq_minimize(const LeastSquaresProblem& problem);

struct ScanReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Real min_nu = 0;
  std::vector<Complex> argmin_coefficients;
  Real closed_form = 0;
  // min_nu - closed_form; never below -1e-9 when the uniform minimum holds.
  Real margin = 0;
  // nu at the unperturbed optimum.
  Real optimum_nu = 0;
};

// Even trials perturb the optimal coefficients by complex Gaussian noise of
// scale 0.1 max|c|; odd trials draw all coefficients at scale max|c|.
// Each competitor's nu is taken on a grid of `grid_nodes` plus refinement.
ScanReport uniform_competitor_scan(const Approximant& approximant, std::size_t trials,
                                   std::uint64_t seed, std::size_t grid_nodes = default_grid_size);

struct ExhaustiveReport {
  Real grid_minimum = 0;
  Complex argmin;
  Complex fourier_coefficient;
  Real closed_form = 0;
  Real spacing = 0;
};

// alpha = 0, n = 0: the single pole is w and R(0) is one complex coefficient c.
// Scans c over a points x points box of half-width `half_width` centred at the
// Fourier coefficient.
ExhaustiveReport small_instance_exhaustive(const KernelSpec& spec, std::size_t points = 201,
                                           Real half_width = 0.5L);

// Relative least-squares residual of fitting r on the circle by
// {1} + {(1 - conj(a_j) x)^{-s_j}} for the poles a_0..a_{n-1}, with x^{s_j}
// standing in for zero poles. Small iff r lies in R(n).
Real rn_membership_residual(const PoleSequence& leading_poles, const RationalFunction& r,
                            std::size_t samples = 64);

// Membership residual of the approximant with its own leading poles.
Real rn_membership_residual(const Approximant& approximant, std::size_t samples = 64);

}  // namespace tmrat
