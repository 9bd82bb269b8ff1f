#pragma once

#include <mpfr.h>

namespace hypcert {

// Working precision expressed in decimal significant digits. The binary
// mantissa carries guard bits beyond the requested digits so that the
// operation chains used here stay correct to at least P - 5 digits.
class Precision {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kDefaultDigits = 60;
  static constexpr int kGuardBits = 48;

  explicit Precision(int digits);

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept;

  friend bool operator==(Precision a, Precision b) noexcept {
    return a.digits_ == b.digits_;
  }
  friend bool operator<(Precision a, Precision b) noexcept {
    return a.digits_ < b.digits_;
  }

 private:
  int digits_;
};

Precision max(Precision a, Precision b) noexcept;

}  // namespace hypcert
