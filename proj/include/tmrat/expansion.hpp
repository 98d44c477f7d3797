#pragma once

// Fourier expansions of boundary functions in a TM system and the H2
// representation f = S_n(f) + B_n * (Blaschke-weighted Cauchy integral).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tmrat/circlequad.hpp"
#include "tmrat/kernels.hpp"
#include "tmrat/tm_basis.hpp"

namespace tmrat {

using BoundaryFunction = std::function<Complex(Complex)>;

// max(4096, 64 (n+1)) rounded up to a power of two.
std::size_t expansion_grid_size(std::size_t max_index);

// c_m(f) = int_T f(t) conj(phi_m(t)) dsigma(t).
Complex fourier_coefficient(const BoundaryFunction& f, const TMBasis& basis, std::size_t m,
                            const CircleGrid& grid);

// c_0..c_n in one pass over the grid.
std::vector<Complex> fourier_coefficients(const BoundaryFunction& f, const TMBasis& basis,
                                          const CircleGrid& grid);

class FourierExpansion {
 public:
  FourierExpansion(TMBasis basis, std::vector<Complex> coefficients, std::string source);

  static FourierExpansion compute(const BoundaryFunction& f, TMBasis basis, const CircleGrid& grid,
                                  std::string source);

  const TMBasis& basis() const noexcept { return basis_; }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  const std::string& source() const noexcept { return source_; }

  // sum_{m < count} c_m phi_m(z).
  Complex partial_sum(std::size_t count, Complex z) const;

 private:
  TMBasis basis_;
  std::vector<Complex> coefficients_;
  std::string source_;
};

// f(z) = int_T f(t)/(1 - z conj(t)) dsigma(t) for boundary traces of H2 functions.
Complex cauchy_integral(const BoundaryFunction& f, const Disk& z, const CircleGrid& grid);

// B_n(z) int_T conj(B_n(t)) f(t)/(1 - z conj(t)) dsigma(t), 0 <= n <= basis.size().
Complex h2_remainder(const BoundaryFunction& f, const TMBasis& basis, std::size_t n, const Disk& z,
                     const CircleGrid& grid);

// Throws unless a_{n-alpha} = ... = a_n = w (bitwise) with alpha <= n <= max_index.
void require_trailing_block(const PoleSequence& poles, std::size_t n, Complex w, unsigned alpha);

// J_{n,alpha}(z; w) = int_T conj(B_{n+1}(t)) K_alpha(t; w)/(1 - z conj(t)) dsigma(t).
Complex remainder_integral_J(const KernelSpec& spec, const TMBasis& basis, std::size_t n,
                             const Disk& z, const CircleGrid& grid);

}  // namespace tmrat
