#include <cmath>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::numerics {
namespace {

// Neumaier's variant of Kahan summation.
inline void neumaier(double& sum, double& comp, double x) noexcept {
  const double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

}  // namespace

void CompensatedSum::add(Complex term) noexcept {
  neumaier(reSum_, reComp_, term.real());
  neumaier(imSum_, imComp_, term.imag());
  ++count_;
}

Complex CompensatedSum::value() const noexcept {
  return {reSum_ + reComp_, imSum_ + imComp_};
}

Complex compensatedSum(std::span<const Complex> terms) noexcept {
  CompensatedSum acc;
  for (const Complex& t : terms) acc.add(t);
  return acc.value();
}

}  // namespace wiltonlab::numerics
