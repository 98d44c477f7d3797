#pragma once

#include <complex>

namespace tmrat {

// All numerics run in extended precision. The minimal error constants decay
// like |w|^{2a+2}|B(w)|^2 and reach 1e-17 on ordinary inputs, so the pointwise
// differences K - S are formed well below the double-precision noise floor.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real pi = 3.141592653589793238462643383279502884L;

namespace detail {

// 1/d with a single real division; libgcc's __divxc3 is several times slower
// and the scaling it performs is not needed for |d| bounded away from 0 and inf.
inline Complex reciprocal(Complex d) {
  const Real q = d.real() * d.real() + d.imag() * d.imag();
  return {d.real() / q, -d.imag() / q};
}

inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace detail

}  // namespace tmrat
