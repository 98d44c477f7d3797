#include "doctest.h"

#include "test_support.hpp"
#include "tmrat/expansion.hpp"

using namespace tmrat;
using tmrat::testing::disk_points;
using tmrat::testing::to_double;

namespace {

// Taylor coefficients of (1 - conj(w) z)^{-2}: (k+1) conj(w)^k.
Complex bergman_taylor(Complex w, int k) { return Real(k + 1) * std::pow(std::conj(w), k); }

}  // namespace

TEST_CASE("grid size for expansions") {
  CHECK(expansion_grid_size(0) == 4096);
  CHECK(expansion_grid_size(63) == 4096);
  CHECK(expansion_grid_size(64) == 8192);
}

TEST_CASE("fourier coefficients of basis functions are Kronecker deltas") {
  const TMBasis basis(PoleSequence({0.3L, Complex(-0.2L, 0.6L), 0.0L, 0.7L, Complex(0.3L)}));
  const CircleGrid grid(4096);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const BoundaryFunction f = [&](Complex t) { return basis(j, t); };
    const auto c = fourier_coefficients(f, basis, grid);
    for (std::size_t m = 0; m < basis.size(); ++m) {
      CHECK(to_double(std::abs(c[m] - Complex(m == j ? 1 : 0))) < 1e-12);
      CHECK(to_double(std::abs(fourier_coefficient(f, basis, m, grid) - c[m])) < 1e-15);
    }
  }
  CHECK_THROWS_AS(fourier_coefficient([](Complex) { return Complex(1); }, basis, 5, grid), IndexOutOfRange);
}

TEST_CASE("bergman kernel coefficients in the monomial basis") {
  const TMBasis basis(PoleSequence(std::vector<Complex>(6, Complex(0))));
  const KernelSpec spec(0, Disk(0.5L));
  const auto c = fourier_coefficients([&](Complex t) { return bergman_eval(spec, t); }, basis, CircleGrid(4096));
  CHECK(to_double(std::abs(c[1] - Complex(1))) < 1e-15);
  for (int k = 0; k < 6; ++k) CHECK(to_double(std::abs(c[k] - bergman_taylor(0.5L, k))) < 1e-15);
}

TEST_CASE("partial sums") {
  const TMBasis basis(PoleSequence(std::vector<Complex>(3, Complex(0))));
  const KernelSpec spec(0, Disk(0.5L));
  const auto expansion = FourierExpansion::compute([&](Complex t) { return bergman_eval(spec, t); }, basis,
                                                   CircleGrid(4096), "K_0(.;0.5)");
  CHECK(expansion.partial_sum(0, 0.3L) == Complex(0));
  Complex series = 0;
  for (int k = 0; k < 3; ++k) series += bergman_taylor(0.5L, k) * std::pow(Complex(0.3L), k);
  CHECK(std::fabs(to_double(series.real() - 1.3675L)) < 1e-18);
  CHECK(to_double(std::abs(expansion.partial_sum(3, 0.3L) - series)) < 1e-15);
  CHECK_THROWS_AS(expansion.partial_sum(4, 0.3L), CountOutOfRange);
  CHECK(expansion.source() == "K_0(.;0.5)");

  const TMBasis other(PoleSequence({0.4L, Complex(0.1L, 0.2L)}));
  const auto single = FourierExpansion::compute([&](Complex t) { return other(0, t); }, other, CircleGrid(4096), "phi_0");
  for (const Complex z : disk_points(5, 1, 1.0L)) CHECK(to_double(std::abs(single.partial_sum(1, z) - other(0, z))) < 1e-12);
}

TEST_CASE("Bessel inequality and coefficient reproducibility") {
  const TMBasis basis(random_poles(12, 21, 0.85L).with_trailing(Complex(0.4L, 0.3L), 2));
  const KernelSpec spec(1, Disk(Complex(0.4L, 0.3L)));
  const CircleGrid grid(4096);
  const BoundaryFunction f = [&](Complex t) { return bergman_eval(spec, t); };
  const auto c = fourier_coefficients(f, basis, grid);
  const Real norm = integrate_circle([&](Complex t) { return Complex(std::norm(f(t))); }, grid).real();
  Real partial = 0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const Real next = partial + std::norm(c[m]);
    CHECK(next >= partial);
    partial = next;
    CHECK(to_double(std::abs(fourier_coefficient(f, basis, m, grid) - c[m])) < 1e-12);
  }
  CHECK(to_double(partial) <= to_double(norm + 1e-10L));
}

TEST_CASE("H2 representation with Blaschke-weighted remainder") {
  const CircleGrid grid(4096);
  SUBCASE("n = 0 gives the Cauchy integral") {
    const TMBasis basis(PoleSequence({0.2L}));
    const KernelSpec spec(0, Disk(0.6L));
    const BoundaryFunction f = [&](Complex t) { return bergman_eval(spec, t); };
    const Disk z(Complex(0.1L, -0.3L));
    CHECK(to_double(std::abs(h2_remainder(f, basis, 0, z, grid) - cauchy_integral(f, z, grid))) < 1e-16);
    CHECK(to_double(std::abs(cauchy_integral(f, z, grid) - bergman_eval(spec, z))) < 1e-15);
  }
  SUBCASE("functions in the span leave no remainder") {
    const TMBasis basis(PoleSequence({0.5L, Complex(0.2L, 0.3L)}));
    const BoundaryFunction f = [&](Complex t) { return basis(0, t); };
    for (const Complex z : disk_points(10, 2, 0.95L)) CHECK(to_double(std::abs(h2_remainder(f, basis, 1, Disk(z), grid))) < 1e-12);
  }
  SUBCASE("two-sided identity for K_1") {
    const TMBasis basis(PoleSequence({0.3L, 0.4L, 0.4L}));
    const KernelSpec spec(1, Disk(0.4L));
    const BoundaryFunction f = [&](Complex t) { return bergman_eval(spec, t); };
    const auto expansion = FourierExpansion::compute(f, basis, grid, "K_1");
    const Disk z(0.2L);
    const Complex rem = h2_remainder(f, basis, 3, z, grid);
    CHECK(to_double(std::abs(cauchy_integral(f, z, grid) - expansion.partial_sum(3, z) - rem)) < 1e-11);
  }
  SUBCASE("random points, several functions, all orders") {
    const TMBasis basis(random_poles(15, 31, 0.8L));
    const KernelSpec spec(2, Disk(Complex(-0.3L, 0.5L)));
    const std::vector<BoundaryFunction> functions = {
        [&](Complex t) { return bergman_eval(spec, t); },
        [&](Complex t) { return basis(7, t); },
        [](Complex t) { return Real(2) - Complex(0, 3) * t + t * t * t; },
    };
    const auto points = disk_points(50, 32, 0.95L);
    for (const auto& f : functions) {
      const auto expansion = FourierExpansion::compute(f, basis, grid, "");
      for (std::size_t n = 0; n <= 15; n += 3) {
        for (const Complex z : points) {
          const Complex residual = f(z) - expansion.partial_sum(n, z) - h2_remainder(f, basis, n, Disk(z), grid);
          CHECK(to_double(std::abs(residual)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("remainder integral J") {
  const CircleGrid grid(4096);
  SUBCASE("w = 0 with zero poles vanishes") {
    const TMBasis basis(PoleSequence(std::vector<Complex>(4, Complex(0))));
    const KernelSpec spec(0, Disk(0));
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(to_double(std::abs(remainder_integral_J(spec, basis, n, Disk(0), grid))) < 1e-18);
      CHECK(to_double(std::abs(remainder_integral_J(spec, basis, n, Disk(Complex(0.3L, 0.4L)), grid))) < 1e-17);
    }
  }
  SUBCASE("remainder equals B_{n+1} J") {
    const Complex w(0.2L, -0.5L);
    const KernelSpec spec(2, Disk(w));
    const TMBasis basis(random_poles(5, 40, 0.85L).with_trailing(w, 3));
    const std::size_t n = basis.max_index();
    const BoundaryFunction f = [&](Complex t) { return bergman_eval(spec, t); };
    const auto expansion = FourierExpansion::compute(f, basis, grid, "");
    const BlaschkeProduct b = basis.blaschke(n + 1);
    for (const Complex z : disk_points(20, 41, 0.95L)) {
      const Complex lhs = f(z) - expansion.partial_sum(n + 1, z);
      CHECK(to_double(std::abs(lhs - b(z) * remainder_integral_J(spec, basis, n, Disk(z), grid))) < 1e-10);
    }
  }
  SUBCASE("trailing block validation") {
    const KernelSpec spec(1, Disk(0.4L));
    const TMBasis good(PoleSequence({0.2L, 0.4L, 0.4L}));
    CHECK_NOTHROW(remainder_integral_J(spec, good, 2, Disk(0), grid));
    CHECK_THROWS_AS(remainder_integral_J(spec, TMBasis(PoleSequence({0.4L, 0.2L, 0.4L})), 2, Disk(0), grid),
                    TrailingPolesMismatch);
    CHECK_THROWS_AS(remainder_integral_J(spec, good, 0, Disk(0), grid), OrderTooSmall);
    CHECK_THROWS_AS(remainder_integral_J(spec, good, 3, Disk(0), grid), TrailingPolesMismatch);
  }
}
