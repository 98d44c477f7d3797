#include "tmrat/kernels.hpp"

#include <string>

namespace tmrat {

KernelSpec::KernelSpec(int alpha, const Disk& w) : alpha_(0), w_(w) {
  if (alpha < 0) throw InvalidArgument("kernel weight alpha must be >= 0, got " + std::to_string(alpha));
  alpha_ = static_cast<unsigned>(alpha);
}

Complex inverse_power(Complex base, unsigned power) {
  const Complex inv = detail::reciprocal(base);
  Complex p = 1;
  for (unsigned k = 0; k < power; ++k) p = detail::mul(p, inv);
  return p;
}

Complex bergman_eval(const KernelSpec& spec, Complex z) {
  return inverse_power(Real(1) - z * std::conj(spec.w()), spec.alpha() + 2);
}

Complex cauchy_power_eval(const KernelSpec& spec, Complex z) {
  return inverse_power(Real(1) - z * std::conj(spec.w()), spec.alpha() + 1);
}

}  // namespace tmrat
