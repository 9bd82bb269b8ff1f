#pragma once

#include <gmpxx.h>

#include <string>

#include "hypcert/hp_real.hpp"

namespace hypcert {

// Complex scalar built from two HPReal components. The logarithm is the
// principal branch, with the argument taken in (-pi, pi].
class HPComplex {
 public:
  HPComplex() = default;
  HPComplex(HPReal real_part, HPReal imag_part)
      : re(std::move(real_part)), im(std::move(imag_part)) {}
  HPComplex(long real_part, long imag_part, Precision p)
      : re(real_part, p), im(imag_part, p) {}
  explicit HPComplex(Precision p) : re(p), im(p) {}

  Precision precision() const noexcept {
    return max(re.precision(), im.precision());
  }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  HPComplex& operator+=(const HPComplex& rhs);
  HPComplex& operator-=(const HPComplex& rhs);

  HPReal re;
  HPReal im;
};

HPComplex operator+(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, const HPComplex& b);
HPComplex operator/(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a);
bool operator==(const HPComplex& a, const HPComplex& b) noexcept;

HPComplex conj(const HPComplex& z);
HPReal abs(const HPComplex& z);
HPReal norm_sqr(const HPComplex& z);
HPComplex log(const HPComplex& z);
HPComplex mul_int(const HPComplex& z, const mpz_class& coefficient);
HPComplex reciprocal(const HPComplex& z);

}  // namespace hypcert
