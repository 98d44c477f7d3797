#include "tmrat/tm_basis.hpp"

#include <cmath>
#include <string>

namespace tmrat {

PoleSequence::PoleSequence(std::vector<Complex> points) : points_(std::move(points)) {
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (!Disk::admissible(points_[j]))
      throw OutsideDisk("pole " + std::to_string(j) + " is not inside the unit disk");
  }
}

unsigned PoleSequence::multiplicity(std::size_t m) const {
  return multiplicity_through(m, m);
}

unsigned PoleSequence::multiplicity_through(std::size_t m, std::size_t n) const {
  if (m >= points_.size() || n >= points_.size())
    throw IndexOutOfRange("pole index out of range");
  unsigned count = 0;
  for (std::size_t j = 0; j <= n; ++j) count += points_[j] == points_[m] ? 1 : 0;
  return count;
}

PoleSequence PoleSequence::prefix(std::size_t count) const {
  if (count > points_.size()) throw CountOutOfRange("prefix longer than the sequence");
  return PoleSequence(std::vector<Complex>(points_.begin(), points_.begin() + count));
}

PoleSequence PoleSequence::with_trailing(Complex w, std::size_t count) const {
  std::vector<Complex> pts = points_;
  pts.insert(pts.end(), count, w);
  return PoleSequence(std::move(pts));
}

Complex PoleSequence::rotation(Complex a) noexcept {
  if (a == Complex(0)) return 1;
  return -std::abs(a) / a;
}

BlaschkeProduct::BlaschkeProduct(std::span<const Complex> zeros, Complex phase)
    : zeros_(zeros.begin(), zeros.end()), phase_(phase) {}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex b = phase_;
  for (const Complex a : zeros_) b = detail::mul(b, (z - a) * detail::reciprocal(Real(1) - std::conj(a) * z));
  return b;
}

Complex BlaschkeProduct::numerator(Complex z) const {
  Complex p = 1;
  for (const Complex a : zeros_) p *= a - z;
  return p;
}

Complex BlaschkeProduct::denominator(Complex z) const {
  Complex p = 1;
  for (const Complex a : zeros_) p *= Real(1) - std::conj(a) * z;
  return p;
}

TMBasis::TMBasis(PoleSequence poles) : poles_(std::move(poles)) {
  if (poles_.empty()) throw InvalidArgument("a TM basis needs at least one pole");
  for (const Complex a : poles_.points()) {
    conj_poles_.push_back(std::conj(a));
    rotations_.push_back(PoleSequence::rotation(a));
    scales_.push_back(std::sqrt(Real(1) - std::norm(a)));
  }
}

void TMBasis::evaluate(Complex z, std::span<Complex> out) const {
  if (out.size() > size()) throw IndexOutOfRange("requested more basis functions than poles");
  Complex running = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Complex inv = detail::reciprocal(Real(1) - detail::mul(conj_poles_[k], z));
    out[k] = scales_[k] * detail::mul(running, inv);
    running = detail::mul(running, detail::mul(rotations_[k], detail::mul(z - poles_[k], inv)));
  }
}

Complex TMBasis::combine(std::span<const Complex> coefficients, Complex z) const {
  if (coefficients.size() > size()) throw IndexOutOfRange("more coefficients than basis functions");
  Complex running = 1;
  CompensatedSum sum;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Complex inv = detail::reciprocal(Real(1) - detail::mul(conj_poles_[k], z));
    sum.add(detail::mul(coefficients[k], scales_[k] * detail::mul(running, inv)));
    running = detail::mul(running, detail::mul(rotations_[k], detail::mul(z - poles_[k], inv)));
  }
  return sum.value();
}

Complex TMBasis::operator()(std::size_t k, Complex z) const {
  if (k > max_index())
    throw IndexOutOfRange("basis index " + std::to_string(k) + " exceeds max index " +
                          std::to_string(max_index()));
  std::vector<Complex> values(k + 1);
  evaluate(z, values);
  return values[k];
}

BlaschkeProduct TMBasis::blaschke(std::size_t k, Complex phase) const {
  if (k > size()) throw IndexOutOfRange("Blaschke degree exceeds the number of poles");
  return BlaschkeProduct(poles_.points().first(k), phase);
}

BasisTable::BasisTable(const TMBasis& basis, const CircleGrid& grid)
    : rows_(grid.size()), cols_(basis.size()), values_(rows_ * cols_) {
  for (std::size_t j = 0; j < rows_; ++j)
    basis.evaluate(grid.node(j), std::span<Complex>(values_.data() + j * cols_, cols_));
}

Real christoffel_darboux_residual(const TMBasis& basis, std::size_t n, const Disk& z,
                                  const Disk& zeta, Complex phase) {
  if (n < 1 || n > basis.size())
    throw CountOutOfRange("Christoffel-Darboux order must lie in [1, max_index + 1]");
  const Complex zc = std::conj(z.value());
  const Complex kernel = Real(1) / (Real(1) - zc * zeta.value());

  std::vector<Complex> at_z(n), at_zeta(n);
  basis.evaluate(z, at_z);
  basis.evaluate(zeta, at_zeta);
  CompensatedSum partial;
  for (std::size_t k = 0; k < n; ++k) partial.add(std::conj(at_z[k]) * at_zeta[k]);

  const BlaschkeProduct b = basis.blaschke(n, phase);
  const Complex tail = std::conj(b(z)) * b(zeta) * kernel;
  return std::abs(kernel - partial.value() - tail);
}

std::vector<Complex> gram_matrix(const TMBasis& basis, const CircleGrid& grid) {
  const std::size_t m = basis.size();
  const BasisTable table(basis, grid);
  std::vector<CompensatedSum> sums(m * m);
  for (std::size_t j = 0; j < table.rows(); ++j) {
    const auto row = table.row(j);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) sums[k * m + l].add(row[k] * std::conj(row[l]));
  }
  std::vector<Complex> gram(m * m);
  for (std::size_t i = 0; i < m * m; ++i) gram[i] = sums[i].value() * grid.weight();
  return gram;
}

Real gram_max_deviation(std::span<const Complex> gram, std::size_t size) {
  Real worst = 0;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t l = 0; l < size; ++l)
      worst = std::max(worst, std::abs(gram[k * size + l] - Complex(k == l ? 1 : 0)));
  return worst;
}

}  // namespace tmrat
