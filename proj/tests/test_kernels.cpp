#include "doctest.h"

#include "test_support.hpp"
#include "tmrat/kernels.hpp"

using namespace tmrat;
using tmrat::testing::disk_points;
using tmrat::testing::to_double;

TEST_CASE("kernel spec validation") {
  CHECK_THROWS_AS(KernelSpec(-1, Disk(0.2L)), InvalidArgument);
  CHECK_THROWS_AS(KernelSpec(0, Disk(1.0L)), OutsideDisk);
  CHECK(KernelSpec(3, Disk(0)).degenerate());
}

TEST_CASE("bergman_eval values") {
  for (int alpha = 0; alpha < 4; ++alpha)
    for (const Complex z : disk_points(5, 2, 1.0L)) CHECK(bergman_eval(KernelSpec(alpha, Disk(0)), z) == Complex(1));
  CHECK(std::fabs(to_double(bergman_eval(KernelSpec(0, Disk(0.5L)), 0.5L).real() - 1 / (0.75L * 0.75L))) < 1e-18);
  // Oracle: 0.7^{-4} from pow.
  const Real expected = std::pow(0.7L, -4);
  CHECK(std::fabs(to_double(bergman_eval(KernelSpec(2, Disk(0.3L)), 1).real() - expected)) < 1e-17);
}

TEST_CASE("cauchy_power_eval values and recursion in alpha") {
  CHECK(cauchy_power_eval(KernelSpec(0, Disk(0)), Complex(0.3L, 0.3L)) == Complex(1));
  CHECK(std::fabs(to_double(cauchy_power_eval(KernelSpec(0, Disk(0.5L)), 0.2L).real() - 1 / 0.9L)) < 1e-18);

  const Disk w(Complex(0, 0.25L));
  CHECK(to_double(std::abs(cauchy_power_eval(KernelSpec(1, w), -0.4L) - bergman_eval(KernelSpec(0, w), -0.4L))) < 1e-18);
  for (int alpha = 1; alpha < 5; ++alpha) {
    for (const Complex z : disk_points(10, 3, 1.0L)) {
      const Complex lhs = cauchy_power_eval(KernelSpec(alpha, w), z) * (Real(1) - z * std::conj(w.value()));
      CHECK(to_double(std::abs(lhs - cauchy_power_eval(KernelSpec(alpha - 1, w), z))) < 1e-17);
      CHECK(to_double(std::abs(cauchy_power_eval(KernelSpec(alpha, w), z) - bergman_eval(KernelSpec(alpha - 1, w), z))) < 1e-17);
    }
  }
}
