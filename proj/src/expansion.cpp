#include "tmrat/expansion.hpp"

#include <algorithm>

namespace tmrat {

std::size_t expansion_grid_size(std::size_t max_index) {
  const std::size_t wanted = std::max<std::size_t>(default_grid_size, 64 * (max_index + 1));
  std::size_t n = 1;
  while (n < wanted) n *= 2;
  return n;
}

Complex fourier_coefficient(const BoundaryFunction& f, const TMBasis& basis, std::size_t m,
                            const CircleGrid& grid) {
  if (m > basis.max_index()) throw IndexOutOfRange("coefficient index exceeds basis max index");
  std::vector<Complex> phi(m + 1);
  return integrate_circle(
      [&](Complex t) {
        basis.evaluate(t, phi);
        return f(t) * std::conj(phi[m]);
      },
      grid);
}

std::vector<Complex> fourier_coefficients(const BoundaryFunction& f, const TMBasis& basis,
                                          const CircleGrid& grid) {
  const std::size_t m = basis.size();
  std::vector<Complex> phi(m);
  std::vector<CompensatedSum> sums(m);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex t = grid.node(j);
    const Complex v = f(t);
    if (!is_finite(v)) throw NonFiniteIntegrand(j);
    basis.evaluate(t, phi);
    for (std::size_t k = 0; k < m; ++k) sums[k].add(detail::mul(v, std::conj(phi[k])));
  }
  std::vector<Complex> c(m);
  for (std::size_t k = 0; k < m; ++k) c[k] = sums[k].value() * grid.weight();
  return c;
}

FourierExpansion::FourierExpansion(TMBasis basis, std::vector<Complex> coefficients,
                                   std::string source)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)), source_(std::move(source)) {
  if (coefficients_.size() > basis_.size())
    throw CountOutOfRange("more coefficients than basis functions");
}

FourierExpansion FourierExpansion::compute(const BoundaryFunction& f, TMBasis basis,
                                           const CircleGrid& grid, std::string source) {
  auto c = fourier_coefficients(f, basis, grid);
  return FourierExpansion(std::move(basis), std::move(c), std::move(source));
}

Complex FourierExpansion::partial_sum(std::size_t count, Complex z) const {
  if (count > coefficients_.size())
    throw CountOutOfRange("partial sum of " + std::to_string(count) + " terms requested, " +
                          std::to_string(coefficients_.size()) + " stored");
  if (count == 0) return 0;
  std::vector<Complex> phi(count);
  basis_.evaluate(z, phi);
  CompensatedSum sum;
  for (std::size_t m = 0; m < count; ++m) sum.add(coefficients_[m] * phi[m]);
  return sum.value();
}

Complex cauchy_integral(const BoundaryFunction& f, const Disk& z, const CircleGrid& grid) {
  const Complex zv = z.value();
  return integrate_circle([&](Complex t) { return f(t) / (Real(1) - zv * std::conj(t)); }, grid);
}

Complex h2_remainder(const BoundaryFunction& f, const TMBasis& basis, std::size_t n, const Disk& z,
                     const CircleGrid& grid) {
  if (n > basis.size()) throw CountOutOfRange("remainder order exceeds the number of poles");
  const BlaschkeProduct b = basis.blaschke(n);
  const Complex zv = z.value();
  const Complex integral = integrate_circle(
      [&](Complex t) { return std::conj(b(t)) * f(t) / (Real(1) - zv * std::conj(t)); }, grid);
  return b(zv) * integral;
}

void require_trailing_block(const PoleSequence& poles, std::size_t n, Complex w, unsigned alpha) {
  if (n < alpha) throw OrderTooSmall("order n must be at least alpha");
  if (n >= poles.size()) throw TrailingPolesMismatch("order n exceeds the pole sequence");
  for (std::size_t j = n - alpha; j <= n; ++j)
    if (poles[j] != w)
      throw TrailingPolesMismatch("pole " + std::to_string(j) +
                                  " differs from w; poles a_{n-alpha}..a_n must all equal w");
}

Complex remainder_integral_J(const KernelSpec& spec, const TMBasis& basis, std::size_t n,
                             const Disk& z, const CircleGrid& grid) {
  require_trailing_block(basis.poles(), n, spec.w(), spec.alpha());
  const BlaschkeProduct b = basis.blaschke(n + 1);
  const Complex zv = z.value();
  return integrate_circle(
      [&](Complex t) {
        return std::conj(b(t)) * bergman_eval(spec, t) / (Real(1) - zv * std::conj(t));
      },
      grid);
}

}  // namespace tmrat
