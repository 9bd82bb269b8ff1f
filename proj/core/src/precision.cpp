#include "hypcert/precision.hpp"

#include <cmath>
#include <stdexcept>

namespace hypcert {

Precision::Precision(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least 30 digits");
  }
}

mpfr_prec_t Precision::bits() const noexcept {
  constexpr double kLog2Of10 = 3.32192809488736234787;
  return static_cast<mpfr_prec_t>(std::ceil(digits_ * kLog2Of10)) + kGuardBits;
}

Precision max(Precision a, Precision b) noexcept {
  return a < b ? b : a;
}

}  // namespace hypcert
