#include "tmrat/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace tmrat {

LeastSquaresProblem::LeastSquaresProblem(const BoundaryFunction& target, const TMBasis& basis,
                                         std::size_t grid_nodes) {
  const CircleGrid& grid = shared_grid(grid_nodes);
  const auto rows = static_cast<Eigen::Index>(grid.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  design_.resize(rows, cols);
  target_.resize(rows);
  std::vector<Complex> phi(basis.size());
  for (Eigen::Index j = 0; j < rows; ++j) {
    const Complex t = grid.node(static_cast<std::size_t>(j));
    basis.evaluate(t, phi);
    for (Eigen::Index m = 0; m < cols; ++m) design_(j, m) = phi[static_cast<std::size_t>(m)];
    target_(j) = target(t);
  }
}

LeastSquaresProblem::LeastSquaresProblem(const KernelSpec& spec, const TMBasis& basis,
                                         std::size_t grid_nodes)
    : LeastSquaresProblem([spec](Complex t) { return bergman_eval(spec, t); }, basis, grid_nodes) {}

namespace {

Real discrete_residual(const ComplexMatrix& a, const ComplexVector& y, const ComplexVector& c) {
  const ComplexVector r = y - a * c;
  CompensatedSum sum;
  for (Eigen::Index j = 0; j < r.size(); ++j) sum.add(Complex(std::norm(r(j))));
  return sum.value().real() / Real(r.size());
}

}  // namespace

LeastSquaresSolution lsq_minimize(const LeastSquaresProblem& problem) {
  const ComplexMatrix& a = problem.design();
  const ComplexVector& y = problem.target();
  const Real n = Real(a.rows());

  const ComplexVector projection = a.adjoint() * y / n;
  const ComplexMatrix gram = a.adjoint() * a / n;

  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram, Eigen::EigenvaluesOnly);
  const Real lo = eig.eigenvalues().minCoeff();
  const Real hi = eig.eigenvalues().maxCoeff();
  const Real condition = lo > 0 ? hi / lo : INFINITY;
  if (!(condition <= 1e8L))
    throw IllConditioned("discrete Gram matrix is numerically singular", double(condition));

  const ComplexVector normal = gram.ldlt().solve(projection);

  LeastSquaresSolution s;
  s.coefficients.assign(projection.data(), projection.data() + projection.size());
  s.normal_coefficients.assign(normal.data(), normal.data() + normal.size());
  s.minimum = discrete_residual(a, y, projection);
  s.normal_minimum = discrete_residual(a, y, normal);
  s.route_gap = (projection - normal).cwiseAbs().maxCoeff();
  s.condition_number = condition;
  s.orthogonality_residual = (a.adjoint() * (y - a * normal) / n).cwiseAbs().maxCoeff();
  return s;
}

ScanReport uniform_competitor_scan(const Approximant& approximant, std::size_t trials,
                                   std::uint64_t seed, std::size_t grid_nodes) {
  const KernelSpec& spec = approximant.spec();
  const CircleGrid& grid = shared_grid(grid_nodes);
  const auto& optimum = approximant.coefficients();
  Real scale = 0;
  for (const Complex c : optimum) scale = std::max(scale, std::abs(c));

  ScanReport report;
  report.seed = seed;
  report.trials = trials;
  report.closed_form = nu_min_closed_form(spec, approximant.free_poles());
  report.optimum_nu = nu_functional(spec, [&](Complex x) { return approximant(x); }, grid);
  report.min_nu = INFINITY;

  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Complex> c(optimum.size());
    for (std::size_t m = 0; m < c.size(); ++m) {
      c[m] = trial % 2 == 0 ? optimum[m] + Real(0.1) * scale * rng.complex_normal()
                            : scale * rng.complex_normal();
    }
    const FixedPoleRational competitor(approximant, c);
    const Real nu = nu_functional(spec, [&](Complex x) { return competitor(x); }, grid);
    if (nu < report.min_nu) {
      report.min_nu = nu;
      report.argmin_coefficients = c;
    }
  }
  report.margin = report.min_nu - report.closed_form;
  return report;
}

ExhaustiveReport small_instance_exhaustive(const KernelSpec& spec, std::size_t points,
                                           Real half_width) {
  if (spec.alpha() != 0) throw InvalidArgument("the exhaustive instance is defined for alpha = 0");
  if (points < 2) throw InvalidArgument("need at least two grid points per axis");
  const Approximant base = Approximant::build(spec, PoleSequence{});
  const TMBasis& basis = base.basis();
  const CircleGrid& grid = shared_grid(base.grid_size());

  // The discretized functional is the quadratic |c|^2 <phi,phi> - 2 Re(conj(c) <K,phi>) + <K,K>.
  CompensatedSum kk, kphi, phiphi;
  for (const Complex t : grid.nodes()) {
    const Complex k = bergman_eval(spec, t);
    const Complex phi = basis(0, t);
    kk.add(Complex(std::norm(k)));
    kphi.add(k * std::conj(phi));
    phiphi.add(Complex(std::norm(phi)));
  }
  const Real w = grid.weight();
  const Real k_norm = kk.value().real() * w;
  const Complex k_phi = kphi.value() * w;
  const Real phi_norm = phiphi.value().real() * w;

  ExhaustiveReport report;
  report.fourier_coefficient = base.coefficients()[0];
  report.closed_form = mu_min_closed_form(spec, PoleSequence{});
  report.spacing = 2 * half_width / Real(points - 1);
  report.grid_minimum = INFINITY;
  const Complex center = report.fourier_coefficient;
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t k = 0; k < points; ++k) {
      const Complex c = center + Complex(-half_width + report.spacing * Real(i),
                                         -half_width + report.spacing * Real(k));
      const Real value = std::norm(c) * phi_norm - 2 * std::real(std::conj(c) * k_phi) + k_norm;
      if (value < report.grid_minimum) {
        report.grid_minimum = value;
        report.argmin = c;
      }
    }
  }
  return report;
}

Real rn_membership_residual(const PoleSequence& leading_poles, const RationalFunction& r,
                            std::size_t samples) {
  const std::size_t cols = leading_poles.size() + 1;
  if (samples <= cols) throw InvalidArgument("membership test needs more samples than unknowns");
  const CircleGrid grid(samples);
  ComplexMatrix a(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(cols));
  ComplexVector y(static_cast<Eigen::Index>(samples));
  for (std::size_t j = 0; j < samples; ++j) {
    const Complex x = grid.node(j);
    const auto row = static_cast<Eigen::Index>(j);
    a(row, 0) = 1;
    for (std::size_t m = 0; m < leading_poles.size(); ++m) {
      const unsigned s = leading_poles.multiplicity(m);
      const Complex p = leading_poles[m];
      const auto col = static_cast<Eigen::Index>(m + 1);
      if (p == Complex(0)) {
        Complex v = 1;
        for (unsigned k = 0; k < s; ++k) v *= x;
        a(row, col) = v;
      } else {
        a(row, col) = inverse_power(Real(1) - std::conj(p) * x, s);
      }
    }
    y(row) = r(x);
  }
  const ComplexVector b = a.colPivHouseholderQr().solve(y);
  const Real scale = y.cwiseAbs().maxCoeff();
  if (scale == 0) return 0;
  return (y - a * b).cwiseAbs().maxCoeff() / scale;
}

Real rn_membership_residual(const Approximant& approximant, std::size_t samples) {
  const PoleSequence& poles = approximant.basis().poles();
  return rn_membership_residual(poles.prefix(poles.size() - 1),
                                [&](Complex x) { return approximant(x); }, samples);
}

}  // namespace tmrat
