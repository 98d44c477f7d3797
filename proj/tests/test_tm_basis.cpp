#include "doctest.h"

#include "test_support.hpp"
#include "tmrat/tm_basis.hpp"

using namespace tmrat;
using tmrat::testing::disk_points;
using tmrat::testing::to_double;

namespace {

// phi_k straight from its definition, one power and product at a time.
Complex phi_direct(const std::vector<Complex>& a, std::size_t k, Complex z) {
  Complex v = std::sqrt(Real(1) - std::norm(a[k])) / (Real(1) - std::conj(a[k]) * z);
  for (std::size_t j = 0; j < k; ++j) {
    const Complex u = a[j] == Complex(0) ? Complex(1) : -std::abs(a[j]) / a[j];
    v *= u * (z - a[j]) / (Real(1) - std::conj(a[j]) * z);
  }
  return v;
}

}  // namespace

TEST_CASE("multiplicities are counted over prefixes by exact equality") {
  const Complex a(0.3L, 0.1L);
  const PoleSequence poles({a, 0.5L, a, a, 0.5L, Complex(0.3L, 0.1L + 1e-18L)});
  CHECK(poles.multiplicity(0) == 1);
  CHECK(poles.multiplicity(1) == 1);
  CHECK(poles.multiplicity(2) == 2);
  CHECK(poles.multiplicity(3) == 3);
  CHECK(poles.multiplicity(4) == 2);
  CHECK(poles.multiplicity_through(0, 5) == 3);
  CHECK(poles.multiplicity_through(1, 3) == 1);
  for (std::size_t m = 0; m < poles.size(); ++m) {
    CHECK(poles.multiplicity(m) >= 1);
    CHECK(poles.multiplicity(m) <= poles.multiplicity_through(m, poles.size() - 1));
  }
  CHECK(poles.multiplicity(5) == poles.multiplicity_through(5, 5));
  CHECK_THROWS_AS(poles.multiplicity(6), IndexOutOfRange);
}

TEST_CASE("pole sequences reject points outside the disk") {
  CHECK_THROWS_AS(PoleSequence({0.2L, 1.0L}), OutsideDisk);
  CHECK_THROWS_AS(PoleSequence({Complex(0, -1 + 1e-10L)}), OutsideDisk);
  const PoleSequence p({0.1L, 0.2L});
  CHECK(p.with_trailing(0.4L, 2).size() == 4);
  CHECK(p.with_trailing(0.4L, 2)[3] == Complex(0.4L));
  CHECK(p.prefix(1).size() == 1);
}

TEST_CASE("zero poles reproduce the monomials") {
  const TMBasis basis(PoleSequence(std::vector<Complex>(8, Complex(0))));
  for (const Complex z : disk_points(20, 11, 1.0L)) {
    Complex power = 1;
    for (std::size_t k = 0; k < basis.size(); ++k, power *= z)
      CHECK(to_double(std::abs(basis(k, z) - power)) < 1e-17);
  }
}

TEST_CASE("tm_eval direct substitution and range errors") {
  const TMBasis basis(PoleSequence({0.5L}));
  CHECK(std::fabs(to_double(basis(0, 0).real() - std::sqrt(0.75L))) < 1e-18);
  CHECK_THROWS_AS(basis(1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(TMBasis(PoleSequence{}), InvalidArgument);
}

TEST_CASE("running-product evaluation matches the defining product") {
  const std::vector<Complex> a = {0.6L, Complex(0.1L, 0.7L), -0.5L, 0, Complex(0.6L), Complex(-0.2L, -0.3L)};
  const TMBasis basis{PoleSequence(a)};
  std::vector<Complex> c(a.size());
  Rng rng(4);
  for (auto& v : c) v = rng.complex_normal();
  for (const Complex z : disk_points(25, 5, 1.0L)) {
    Complex combined = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(to_double(std::abs(basis(k, z) - phi_direct(a, k, z))) < 1e-16);
      combined += c[k] * phi_direct(a, k, z);
    }
    CHECK(to_double(std::abs(basis.combine(c, z) - combined)) < 1e-16);
  }
}

TEST_CASE("degree recurrence between consecutive basis functions") {
  const std::vector<Complex> a = {Complex(0.3L, -0.2L), Complex(-0.6L, 0.1L), 0.45L, Complex(0, 0.8L)};
  const TMBasis basis{PoleSequence(a)};
  for (const Complex z : disk_points(10, 6, 0.95L)) {
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      const Complex lhs = basis(k + 1, z) * (Real(1) - std::conj(a[k + 1]) * z) / std::sqrt(1 - std::norm(a[k + 1]));
      const Complex rhs = basis(k, z) * (Real(1) - std::conj(a[k]) * z) / std::sqrt(1 - std::norm(a[k])) *
                          (-std::abs(a[k]) / a[k]) * (z - a[k]) / (Real(1) - std::conj(a[k]) * z);
      CHECK(to_double(std::abs(lhs - rhs)) < 1e-16);
    }
  }
}

TEST_CASE("Blaschke products") {
  CHECK(BlaschkeProduct({})(Complex(0.3L, 0.2L)) == Complex(1));
  const std::vector<Complex> single = {0.5L};
  CHECK(BlaschkeProduct(single)(0.5L) == Complex(0));

  const std::vector<Complex> zeros = {0.3L, Complex(0, -0.4L)};
  const BlaschkeProduct b(zeros);
  CHECK(std::fabs(to_double(std::abs(b(std::polar(Real(1), pi / 7))) - 1)) < 1e-14);
  for (const Complex z : disk_points(20, 8, 0.99L)) CHECK(std::abs(b(z)) < 1);

  const std::vector<Complex> many = {0.9L, Complex(-0.3L, 0.85L), Complex(0, 0), Complex(-0.5L, -0.5L), 0.9L};
  const BlaschkeProduct bm(many);
  const CircleGrid grid(257);
  for (const Complex t : grid.nodes()) CHECK(std::fabs(to_double(std::abs(bm(t)) - 1)) < 1e-13);
  // pi/tau equals B up to the phase prod(-1).
  const Complex z(0.2L, 0.1L);
  CHECK(to_double(std::abs(bm(z) + bm.numerator(z) / bm.denominator(z))) < 1e-16);
}

TEST_CASE("Gram matrix of the TM system is the identity") {
  const TMBasis small(PoleSequence({0.3L, Complex(0, -0.4L), 0.5L, 0.2L}));
  const auto g = gram_matrix(small, CircleGrid(4096));
  CHECK(to_double(std::abs(g[2 * 4 + 3])) < 1e-12);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TMBasis basis(random_poles(15 + seed, seed, 0.9L));
    const auto gram = gram_matrix(basis, CircleGrid(4096));
    CHECK(to_double(gram_max_deviation(gram, basis.size())) < 1e-12);
  }
}

TEST_CASE("Christoffel-Darboux identity") {
  SUBCASE("origin") {
    const TMBasis basis(PoleSequence({0.6L, 0.2L}));
    CHECK(to_double(christoffel_darboux_residual(basis, 1, Disk(0), Disk(0))) < 1e-18);
  }
  SUBCASE("zero poles give the truncated geometric series") {
    const TMBasis basis(PoleSequence(std::vector<Complex>(3, Complex(0))));
    CHECK(to_double(christoffel_darboux_residual(basis, 3, Disk(0.2L), Disk(Complex(0, 0.5L)))) < 1e-14);
  }
  SUBCASE("random points") {
    const TMBasis basis(PoleSequence({0.6L, Complex(0.1L, 0.7L), -0.5L}));
    const auto zs = disk_points(30, 9, 0.99L);
    const auto zetas = disk_points(30, 10, 0.99L);
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t n = 1; n <= 3; ++n)
        CHECK(to_double(christoffel_darboux_residual(basis, n, Disk(zs[i]), Disk(zetas[i]))) < 1e-12);
  }
  SUBCASE("phase freedom") {
    const TMBasis basis(random_poles(12, 77, 0.9L));
    const Complex phase = std::polar(Real(1), Real(0.7));
    for (const Complex z : disk_points(10, 12, 0.9L)) {
      const Real a = christoffel_darboux_residual(basis, 12, Disk(z), Disk(z * Real(0.5)));
      const Real b = christoffel_darboux_residual(basis, 12, Disk(z), Disk(z * Real(0.5)), phase);
      CHECK(to_double(std::fabs(a - b)) < 1e-17);
    }
  }
  SUBCASE("order out of range") {
    const TMBasis basis(PoleSequence({0.1L}));
    CHECK_THROWS_AS(christoffel_darboux_residual(basis, 0, Disk(0), Disk(0)), CountOutOfRange);
    CHECK_THROWS_AS(christoffel_darboux_residual(basis, 2, Disk(0), Disk(0)), CountOutOfRange);
  }
}
