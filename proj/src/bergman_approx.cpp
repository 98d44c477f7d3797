#include "tmrat/bergman_approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tmrat {

namespace {

Complex ipow(Complex base, unsigned power) {
  Complex p = 1;
  for (unsigned k = 0; k < power; ++k) p *= base;
  return p;
}

Real ipow(Real base, unsigned power) {
  Real p = 1;
  for (unsigned k = 0; k < power; ++k) p *= base;
  return p;
}

Real sign_power(unsigned alpha) { return alpha % 2 == 0 ? 1 : -1; }

Real free_blaschke_modulus(const PoleSequence& free_poles, Complex w) {
  return std::abs(BlaschkeProduct(free_poles.points())(w));
}

}  // namespace

std::size_t free_pole_count(std::size_t n, unsigned alpha) {
  if (n < alpha)
    throw OrderTooSmall("order n = " + std::to_string(n) + " is below alpha = " + std::to_string(alpha));
  return n - alpha;
}

std::size_t recommended_grid_size(const PoleSequence& poles, Complex w) {
  Real rho = std::abs(w);
  for (const Complex a : poles.points()) rho = std::max(rho, std::abs(a));
  const std::size_t floor_nodes = poles.empty() ? default_grid_size : expansion_grid_size(poles.size() - 1);
  return minimum_grid_size(rho, floor_nodes);
}

Approximant Approximant::build(const KernelSpec& spec, const PoleSequence& free_poles,
                               std::optional<std::size_t> grid_size) {
  PoleSequence poles = free_poles.with_trailing(spec.w(), spec.alpha() + 1);
  const std::size_t nodes = grid_size.value_or(recommended_grid_size(poles, spec.w()));
  TMBasis basis(std::move(poles));
  auto coefficients = fourier_coefficients([&](Complex t) { return bergman_eval(spec, t); }, basis,
                                           shared_grid(nodes));
  return Approximant(spec, free_poles, std::move(basis), std::move(coefficients), nodes);
}

bool Approximant::free_pole_equals_w() const noexcept {
  const Complex w = spec_.w();
  return std::any_of(free_poles_.points().begin(), free_poles_.points().end(),
                     [w](Complex a) { return a == w; });
}

Complex Approximant::partial_sum(Complex x) const {
  if (spec_.degenerate()) return 1;
  return basis_.combine(coefficients_, x);
}

Complex Approximant::operator()(Complex x) const {
  if (spec_.degenerate()) return 1;
  return (Real(1) - x * std::conj(spec_.w())) * basis_.combine(coefficients_, x);
}

Complex Approximant::closed_form(Complex z, Complex phase) const {
  const Complex w = spec_.w();
  const Complex wc = std::conj(w);
  const unsigned p = spec_.alpha() + 1;
  const Real base = ipow(Real(1) - std::norm(w), p);
  const BlaschkeProduct b(free_poles_.points(), phase);
  const Complex numerator =
      base + sign_power(spec_.alpha()) * ipow(wc * (w - z), p) * b(z) * std::conj(b(w));
  const Complex denominator = base * ipow(Real(1) - wc * z, p);
  return numerator / denominator;
}

FixedPoleRational::FixedPoleRational(const Approximant& base, std::vector<Complex> coefficients)
    : basis_(&base.basis()), w_conj_(std::conj(base.spec().w())), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != basis_->size())
    throw CountOutOfRange("an element of R(n) needs exactly n+1 coefficients");
}

Complex FixedPoleRational::operator()(Complex x) const {
  return (Real(1) - x * w_conj_) * basis_->combine(coefficients_, x);
}

Real mu_functional(const KernelSpec& spec, const RationalFunction& r, const CircleGrid& grid) {
  const Complex wc = std::conj(spec.w());
  return integrate_circle(
             [&](Complex x) {
               const Complex e = bergman_eval(spec, x) - r(x) / (Real(1) - x * wc);
               return Complex(std::norm(e));
             },
             grid)
      .real();
}

std::pair<Real, std::size_t> mu_functional_adaptive(const KernelSpec& spec,
                                                    const RationalFunction& r,
                                                    std::size_t start_nodes, Real rel_tol) {
  const Complex wc = std::conj(spec.w());
  const auto result = integrate_circle_adaptive(
      [&](Complex x) {
        const Complex e = bergman_eval(spec, x) - r(x) / (Real(1) - x * wc);
        return Complex(std::norm(e));
      },
      start_nodes, rel_tol);
  return {result.value.real(), result.node_count};
}

Real mu_min_closed_form(const KernelSpec& spec, const PoleSequence& free_poles) {
  if (spec.degenerate()) return 0;
  const Real w2 = std::norm(spec.w());
  const unsigned a = spec.alpha();
  const Real b = free_blaschke_modulus(free_poles, spec.w());
  return ipow(w2, a + 1) / ipow(Real(1) - w2, 2 * a + 3) * b * b;
}

Real nu_min_closed_form(const KernelSpec& spec, const PoleSequence& free_poles) {
  if (spec.degenerate()) return 0;
  const Real m = std::abs(spec.w());
  return ipow(m / (Real(1) - m * m), spec.alpha() + 1) * free_blaschke_modulus(free_poles, spec.w());
}

namespace {

Real uniform_error(const KernelSpec& spec, const RationalFunction& r, Complex x) {
  return std::abs(cauchy_power_eval(spec, x) - r(x));
}

}  // namespace

Real nu_functional(const KernelSpec& spec, const RationalFunction& r, const CircleGrid& grid) {
  std::size_t best = 0;
  Real best_value = -1;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Real v = uniform_error(spec, r, grid.node(j));
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  const Real step = 2 * pi / Real(grid.size());
  auto at = [&](Real theta) { return uniform_error(spec, r, Complex(std::cos(theta), std::sin(theta))); };

  constexpr Real inv_phi = 0.618033988749894848204586834365638118L;
  Real lo = step * (Real(best) - 1);
  Real hi = step * (Real(best) + 1);
  Real x1 = hi - inv_phi * (hi - lo);
  Real x2 = lo + inv_phi * (hi - lo);
  Real f1 = at(x1);
  Real f2 = at(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = at(x2);
    }
  }
  return std::max({best_value, f1, f2});
}

Real equimodularity_variation(const KernelSpec& spec, const RationalFunction& r,
                              const CircleGrid& grid) {
  Real lo = INFINITY, hi = 0, total = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Real v = uniform_error(spec, r, grid.node(j));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    total += v;
  }
  const Real mean = total / Real(grid.size());
  if (mean == 0) return 0;
  return (hi - lo) / mean;
}

Complex remainder_closed_form(const KernelSpec& spec, const TMBasis& basis, std::size_t n,
                              Complex z) {
  require_trailing_block(basis.poles(), n, spec.w(), spec.alpha());
  if (spec.degenerate()) return 0;
  const Complex w = spec.w();
  const Complex wc = std::conj(w);
  const unsigned p = spec.alpha() + 1;
  const BlaschkeProduct b = basis.blaschke(n - spec.alpha());
  return sign_power(spec.alpha()) * ipow(wc / (Real(1) - std::norm(w)), p) *
         ipow((w - z) / (Real(1) - wc * z), p) * b(z) * std::conj(b(w)) / (wc * z - Real(1));
}

Complex closed_form_J(const KernelSpec& spec, const TMBasis& basis, std::size_t n, const Disk& z) {
  require_trailing_block(basis.poles(), n, spec.w(), spec.alpha());
  if (spec.degenerate()) return 0;
  const Complex w = spec.w();
  const unsigned p = spec.alpha() + 1;
  const std::size_t free_count = n - spec.alpha();

  // Value with the rotated Blaschke products B_k * prod u_j that the TM
  // system itself carries.
  Complex rotation_free = 1;
  for (std::size_t j = 0; j < free_count; ++j) rotation_free *= PoleSequence::rotation(basis.poles()[j]);
  const Complex rotated_b_w = rotation_free * basis.blaschke(free_count)(w);
  const Real m = std::abs(w);
  const Complex rotated = sign_power(spec.alpha()) * ipow(m / (Real(1) - m * m), p) *
                          std::conj(rotated_b_w) / (std::conj(w) * z.value() - Real(1));

  // Phase-1 products differ from the rotated ones by prod_{j<=n} u_j.
  const Complex alignment = rotation_free * ipow(PoleSequence::rotation(w), p);
  return alignment * rotated;
}

Complex interpolation_target(const KernelSpec& spec, Complex a, unsigned s) {
  if (s == 0) throw InvalidArgument("multiplicity must be at least 1");
  const unsigned alpha = spec.alpha();
  const Complex wc = std::conj(spec.w());
  const Real falling = factorial(alpha + s - 1) / factorial(alpha);
  return falling * ipow(wc, s - 1) * inverse_power(Real(1) - wc * a, alpha + s);
}

std::vector<Real> interpolation_residuals(const Approximant& approximant) {
  const PoleSequence& poles = approximant.basis().poles();
  std::vector<Real> residuals(poles.size(), 0);
  if (approximant.spec().degenerate()) return residuals;
  const auto closed = [&](Complex z) { return approximant.closed_form(z); };
  for (std::size_t m = 0; m < poles.size(); ++m) {
    const unsigned s = poles.multiplicity(m);
    const Disk a(poles[m]);
    const Complex derivative = derivative_at(closed, a, s - 1);
    residuals[m] = std::abs(derivative - interpolation_target(approximant.spec(), poles[m], s));
  }
  return residuals;
}

ErrorReport error_report(const Approximant& approximant, const ReportOptions& options) {
  const KernelSpec& spec = approximant.spec();
  ErrorReport report;
  report.n = approximant.order();
  report.alpha = spec.alpha();
  report.w = spec.w();
  report.free_poles.assign(approximant.free_poles().points().begin(),
                           approximant.free_poles().points().end());
  report.coefficient_grid = approximant.grid_size();
  report.free_pole_equals_w = approximant.free_pole_equals_w();

  const RationalFunction r = [&](Complex x) { return approximant(x); };
  const auto [mu, mu_nodes] =
      mu_functional_adaptive(spec, r, approximant.grid_size(), options.mu_rel_tol);
  report.mu_quad = mu;
  report.mu_grid = mu_nodes;
  report.mu_closed = mu_min_closed_form(spec, approximant.free_poles());

  report.nu_grid_nodes = options.nu_nodes;
  report.nu_grid = nu_functional(spec, r, shared_grid(options.nu_nodes));
  report.nu_closed = nu_min_closed_form(spec, approximant.free_poles());

  const auto residuals = interpolation_residuals(approximant);
  report.max_interp_residual = *std::max_element(residuals.begin(), residuals.end());
  return report;
}

}  // namespace tmrat
