#pragma once

// Pole sequences, finite Blaschke products and the Takenaka-Malmquist system
//
//   phi_k(z) = sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j<k} u_j (z - a_j)/(1 - conj(a_j) z),
//
// with unimodular rotations u_j = -|a_j|/a_j, and u_j = 1 when a_j = 0 so that a
// sequence of zero poles reproduces the monomials z^k.

#include <cstddef>
#include <span>
#include <vector>

#include "tmrat/circlequad.hpp"
#include "tmrat/types.hpp"

namespace tmrat {

// Ordered points a_0, a_1, ... of the open disk. Repeated values are compared
// bitwise; multiplicities are never inferred from nearby values.
class PoleSequence {
 public:
  PoleSequence() = default;
  explicit PoleSequence(std::vector<Complex> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  Complex operator[](std::size_t j) const { return points_[j]; }
  std::span<const Complex> points() const noexcept { return points_; }

  // s_m: occurrences of a_m among a_0..a_m.
  unsigned multiplicity(std::size_t m) const;
  // p_m(n): occurrences of a_m among a_0..a_n.
  unsigned multiplicity_through(std::size_t m, std::size_t n) const;

  PoleSequence prefix(std::size_t count) const;
  // This sequence followed by `count` copies of w.
  PoleSequence with_trailing(Complex w, std::size_t count) const;

  // u_j = -|a_j|/a_j, or exactly 1 when a_j = 0.
  static Complex rotation(Complex a) noexcept;

  friend bool operator==(const PoleSequence&, const PoleSequence&) = default;

 private:
  std::vector<Complex> points_;
};

// B(z) = phase * prod_j (z - a_j)/(1 - conj(a_j) z). The library default is
// phase 1; a different unimodular phase is accepted so that phase independence
// of derived quantities can be exercised.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::span<const Complex> zeros, Complex phase = 1);

  std::size_t degree() const noexcept { return zeros_.size(); }
  Complex phase() const noexcept { return phase_; }
  std::span<const Complex> zeros() const noexcept { return zeros_; }

  Complex operator()(Complex z) const;

  // pi(z) = prod_j (a_j - z) and tau(z) = prod_j (1 - conj(a_j) z).
  Complex numerator(Complex z) const;
  Complex denominator(Complex z) const;

 private:
  std::vector<Complex> zeros_;
  Complex phase_;
};

class TMBasis {
 public:
  explicit TMBasis(PoleSequence poles);

  const PoleSequence& poles() const noexcept { return poles_; }
  // Highest index n; the basis holds phi_0..phi_n.
  std::size_t max_index() const noexcept { return poles_.size() - 1; }
  std::size_t size() const noexcept { return poles_.size(); }

  Complex operator()(std::size_t k, Complex z) const;

  // phi_0(z)..phi_{out.size()-1}(z) in one pass of running products.
  void evaluate(Complex z, std::span<Complex> out) const;

  // sum_k c_k phi_k(z) without materializing the basis values.
  Complex combine(std::span<const Complex> coefficients, Complex z) const;

  // B_k built from a_0..a_{k-1}.
  BlaschkeProduct blaschke(std::size_t k, Complex phase = 1) const;

 private:
  PoleSequence poles_;
  std::vector<Complex> conj_poles_;
  std::vector<Complex> rotations_;
  std::vector<Real> scales_;
};

// Row-major table phi_k(t_j) on a grid, size() rows by basis.size() columns.
class BasisTable {
 public:
  BasisTable(const TMBasis& basis, const CircleGrid& grid);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Complex> row(std::size_t j) const { return {values_.data() + j * cols_, cols_}; }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> values_;
};

// |1/(1 - conj(z) zeta) - sum_{k<n} conj(phi_k(z)) phi_k(zeta)
//   - conj(B_n(z)) B_n(zeta)/(1 - conj(z) zeta)|, 1 <= n <= max_index + 1.
Real christoffel_darboux_residual(const TMBasis& basis, std::size_t n, const Disk& z,
                                  const Disk& zeta, Complex phase = 1);

// <phi_k, phi_l> by quadrature, row-major (size x size).
std::vector<Complex> gram_matrix(const TMBasis& basis, const CircleGrid& grid);

// max_{k,l} |G_kl - delta_kl|.
Real gram_max_deviation(std::span<const Complex> gram, std::size_t size);

}  // namespace tmrat
