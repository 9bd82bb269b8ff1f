#include "hypcert/hp_complex.hpp"

namespace hypcert {

HPComplex& HPComplex::operator+=(const HPComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

HPComplex operator+(const HPComplex& a, const HPComplex& b) {
  return HPComplex(a.re + b.re, a.im + b.im);
}

HPComplex operator-(const HPComplex& a, const HPComplex& b) {
  return HPComplex(a.re - b.re, a.im - b.im);
}

HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  return HPComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

HPComplex operator/(const HPComplex& a, const HPComplex& b) {
  HPReal q = norm_sqr(b);
  return HPComplex((a.re * b.re + a.im * b.im) / q,
                   (a.im * b.re - a.re * b.im) / q);
}

HPComplex operator-(const HPComplex& a) {
  return HPComplex(-a.re, -a.im);
}

bool operator==(const HPComplex& a, const HPComplex& b) noexcept {
  return a.re == b.re && a.im == b.im;
}

HPComplex conj(const HPComplex& z) {
  return HPComplex(z.re, -z.im);
}

HPReal abs(const HPComplex& z) {
  return hypot(z.re, z.im);
}

HPReal norm_sqr(const HPComplex& z) {
  return z.re * z.re + z.im * z.im;
}

HPComplex log(const HPComplex& z) {
  return HPComplex(log(abs(z)), atan2(z.im, z.re));
}

HPComplex mul_int(const HPComplex& z, const mpz_class& coefficient) {
  HPReal re(z.re.precision());
  HPReal im(z.im.precision());
  mpfr_mul_z(re.raw(), z.re.raw(), coefficient.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_z(im.raw(), z.im.raw(), coefficient.get_mpz_t(), MPFR_RNDN);
  return HPComplex(std::move(re), std::move(im));
}

HPComplex reciprocal(const HPComplex& z) {
  HPReal q = norm_sqr(z);
  return HPComplex(z.re / q, -z.im / q);
}

}  // namespace hypcert
