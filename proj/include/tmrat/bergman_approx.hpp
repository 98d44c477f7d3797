#pragma once

// Best approximation of weighted Bergman kernels by rational functions with
// prescribed poles.
//
// Given free poles a_0..a_{n-alpha-1} and the kernel point w, the full pole
// sequence is the free poles followed by alpha+1 copies of w. The approximant
//
//   r(x) = (1 - x conj(w)) S_{n+1}(K_alpha)(x; w)
//
// minimizes both int_T |K_alpha - R/(1 - x conj(w))|^2 dsigma and
// sup_T |(1 - x conj(w))^{-(1+alpha)} - R| over the class R(n), with minima
//
//   mu_min = |w|^{2a+2} |B_{n-a}(w)|^2 / (1-|w|^2)^{2a+3},
//   nu_min = (|w|/(1-|w|^2))^{a+1} |B_{n-a}(w)|,
//
// where B_{n-a} is the Blaschke product over the free poles only.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tmrat/circlequad.hpp"
#include "tmrat/expansion.hpp"
#include "tmrat/kernels.hpp"
#include "tmrat/tm_basis.hpp"

namespace tmrat {

using RationalFunction = std::function<Complex(Complex)>;

class Approximant {
 public:
  // Expands K_alpha on the pole sequence (free_poles, w, ..., w). The grid
  // defaults to recommended_grid_size for the resulting sequence.
  static Approximant build(const KernelSpec& spec, const PoleSequence& free_poles,
                           std::optional<std::size_t> grid_size = std::nullopt);

  const KernelSpec& spec() const noexcept { return spec_; }
  const TMBasis& basis() const noexcept { return basis_; }
  const PoleSequence& free_poles() const noexcept { return free_poles_; }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  std::size_t order() const noexcept { return basis_.max_index(); }
  std::size_t grid_size() const noexcept { return grid_size_; }

  // Some free pole equals w, so the block at w is longer than alpha+1.
  bool free_pole_equals_w() const noexcept;

  // S_{n+1}(K_alpha)(x; w).
  Complex partial_sum(Complex x) const;
  // (1 - x conj(w)) S_{n+1}(K_alpha)(x; w). Exactly 1 when w = 0.
  Complex operator()(Complex x) const;

  // Explicit rational form
  //   [(1-|w|^2)^{a+1} + (-1)^a (conj(w)(w-z))^{a+1} B(z) conj(B(w))]
  //   / [(1-|w|^2)^{a+1} (1 - conj(w) z)^{a+1}],
  // B over the free poles with the given phase (which cancels).
  Complex closed_form(Complex z, Complex phase = 1) const;

 private:
  Approximant(KernelSpec spec, PoleSequence free_poles, TMBasis basis,
              std::vector<Complex> coefficients, std::size_t grid_size)
      : spec_(spec),
        free_poles_(std::move(free_poles)),
        basis_(std::move(basis)),
        coefficients_(std::move(coefficients)),
        grid_size_(grid_size) {}

  KernelSpec spec_;
  PoleSequence free_poles_;
  TMBasis basis_;
  std::vector<Complex> coefficients_;
  std::size_t grid_size_;
};

// n - alpha, the number of free poles for total order n; OrderTooSmall if n < alpha.
std::size_t free_pole_count(std::size_t n, unsigned alpha);

// Node count for expansions on this pole sequence and kernel point.
std::size_t recommended_grid_size(const PoleSequence& poles, Complex w);

// An element of R(n) written as R(x) = (1 - x conj(w)) sum_m c_m phi_m(x)
// over the approximant's basis. Every element of R(n) has this form.
class FixedPoleRational {
 public:
  FixedPoleRational(const Approximant& base, std::vector<Complex> coefficients);

  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  Complex operator()(Complex x) const;

 private:
  const TMBasis* basis_;
  Complex w_conj_;
  std::vector<Complex> coefficients_;
};

// int_T |K_alpha(x; w) - R(x)/(1 - x conj(w))|^2 dsigma(x).
Real mu_functional(const KernelSpec& spec, const RationalFunction& r, const CircleGrid& grid);

// mu_functional with the node count doubled until two successive values agree
// to rel_tol; returns the value and the node count used.
std::pair<Real, std::size_t> mu_functional_adaptive(const KernelSpec& spec,
                                                    const RationalFunction& r,
                                                    std::size_t start_nodes,
                                                    Real rel_tol = 1e-12L);

Real mu_min_closed_form(const KernelSpec& spec, const PoleSequence& free_poles);

// sup_T |(1 - x conj(w))^{-(1+alpha)} - R(x)|: grid maximum, then 60 golden
// section steps over the two arcs adjacent to the best node.
Real nu_functional(const KernelSpec& spec, const RationalFunction& r, const CircleGrid& grid);

Real nu_min_closed_form(const KernelSpec& spec, const PoleSequence& free_poles);

// (max - min)/mean of |(1 - x conj(w))^{-(1+alpha)} - R(x)| over the grid.
Real equimodularity_variation(const KernelSpec& spec, const RationalFunction& r,
                              const CircleGrid& grid);

// Right side of the remainder identity
//   K_alpha(z; w) - S_{n+1}(z) = (-1)^a (conj(w)/(1-|w|^2))^{a+1}
//       ((w - z)/(1 - conj(w) z))^{a+1} B_{n-a}(z) conj(B_{n-a}(w)) / (conj(w) z - 1).
Complex remainder_closed_form(const KernelSpec& spec, const TMBasis& basis, std::size_t n,
                              Complex z);

// Closed form of J_{n,alpha}(z; w) expressed for phase-1 Blaschke products, so
// it is directly comparable with remainder_integral_J.
Complex closed_form_J(const KernelSpec& spec, const TMBasis& basis, std::size_t n, const Disk& z);

// Target of the interpolation condition of order s-1 at a pole a:
//   d^{s-1}/dz^{s-1} (1 - z conj(w))^{-(1+alpha)} at z = a
//   = (alpha+s-1)!/alpha! conj(w)^{s-1} / (1 - conj(w) a)^{alpha+s}.
Complex interpolation_target(const KernelSpec& spec, Complex a, unsigned s);

// For each pole a_m (m = 0..n) with multiplicity s_m counted over the whole
// prefix a_0..a_m: |r^{(s_m-1)}(a_m) - interpolation_target(a_m, s_m)|, the
// derivative taken numerically from the closed form. All zero when w = 0.
std::vector<Real> interpolation_residuals(const Approximant& approximant);

struct ErrorReport {
  std::size_t n = 0;
  unsigned alpha = 0;
  Complex w;
  std::vector<Complex> free_poles;
  std::size_t coefficient_grid = 0;
  std::size_t mu_grid = 0;
  std::size_t nu_grid_nodes = 0;
  Real mu_quad = 0;
  Real mu_closed = 0;
  Real nu_grid = 0;
  Real nu_closed = 0;
  Real max_interp_residual = 0;
  bool free_pole_equals_w = false;
};

struct ReportOptions {
  std::size_t nu_nodes = std::size_t{1} << 16;
  Real mu_rel_tol = 1e-12L;
};

ErrorReport error_report(const Approximant& approximant, const ReportOptions& options = {});

}  // namespace tmrat
