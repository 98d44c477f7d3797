#pragma once

#include "tmrat/circlequad.hpp"
#include "tmrat/types.hpp"

namespace tmrat {

// Selects K_alpha(z; w) = (1 - z conj(w))^{-(2+alpha)} for integer alpha >= 0.
class KernelSpec {
 public:
  KernelSpec(int alpha, const Disk& w);

  unsigned alpha() const noexcept { return alpha_; }
  Complex w() const noexcept { return w_.value(); }
  const Disk& point() const noexcept { return w_; }
  bool degenerate() const noexcept { return w_.value() == Complex(0); }

 private:
  unsigned alpha_;
  Disk w_;
};

// (1 - z conj(w))^{-power} by repeated multiplication of the base inverse.
Complex inverse_power(Complex base, unsigned power);

// Weighted Bergman kernel (1 - z conj(w))^{-(2+alpha)}.
Complex bergman_eval(const KernelSpec& spec, Complex z);

// (1 - z conj(w))^{-(1+alpha)}; the Cauchy kernel for alpha = 0.
Complex cauchy_power_eval(const KernelSpec& spec, Complex z);

}  // namespace tmrat
