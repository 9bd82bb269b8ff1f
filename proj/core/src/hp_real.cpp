#include "hypcert/hp_real.hpp"

#include <cctype>
#include <cstring>
#include <utility>

#include "hypcert/errors.hpp"

namespace hypcert {

HPReal::HPReal(Precision p) : prec_(p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long value, Precision p) : prec_(p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, value, MPFR_RNDN);
}

HPReal::HPReal(const HPReal& other) : prec_(other.prec_) {
  mpfr_init2(v_, other.prec_.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec_.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
    prec_ = other.prec_;
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    prec_ = other.prec_;
  }
  return *this;
}

HPReal::~HPReal() {
  mpfr_clear(v_);
}

HPReal HPReal::from_decimal(std::string_view text, Precision p) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  if (begin == end) {
    throw ParseError("empty numeric literal", begin);
  }
  std::string body(text.substr(begin, end - begin));
  HPReal r(p);
  char* tail = nullptr;
  mpfr_strtofr(r.v_, body.c_str(), &tail, 10, MPFR_RNDN);
  if (tail == body.c_str()) {
    throw ParseError("unreadable numeric literal", begin);
  }
  if (*tail != '\0') {
    throw ParseError("trailing characters in numeric literal",
                     begin + static_cast<std::size_t>(tail - body.c_str()));
  }
  return r;
}

int HPReal::sign() const noexcept {
  if (mpfr_nan_p(v_)) {
    return 0;
  }
  return mpfr_sgn(v_);
}

bool HPReal::is_zero() const noexcept {
  return mpfr_zero_p(v_) != 0;
}

bool HPReal::is_finite() const noexcept {
  return mpfr_number_p(v_) != 0;
}

double HPReal::to_double() const noexcept {
  return mpfr_get_d(v_, MPFR_RNDN);
}

std::string HPReal::to_decimal(int significant_digits) const {
  if (significant_digits < 1) {
    significant_digits = 1;
  }
  if (mpfr_nan_p(v_)) {
    return "nan";
  }
  if (mpfr_inf_p(v_)) {
    return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  }
  if (mpfr_zero_p(v_)) {
    return "0";
  }
  mpfr_exp_t exp = 0;
  char* digits = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(significant_digits),
                              v_, MPFR_RNDN);
  std::string mant(digits);
  mpfr_free_str(digits);

  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }

  // mpfr_get_str yields value = 0.mant * 10^exp. Values of moderate size
  // render in fixed notation; everything else uses exponent form.
  std::string out;
  if (exp >= -5 && exp <= significant_digits) {
    if (exp <= 0) {
      out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
    } else if (static_cast<size_t>(exp) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0') + ".0";
    } else {
      out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) {
      out += "." + mant.substr(1);
    }
    mpfr_exp_t e10 = exp - 1;
    out += "E";
    if (e10 >= 0) {
      out += "+";
    }
    out += std::to_string(static_cast<long long>(e10));
  }
  return sign + out;
}

HPReal& HPReal::operator+=(const HPReal& rhs) {
  if (!(prec_ < rhs.prec_)) {
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this + rhs;
}

HPReal& HPReal::operator-=(const HPReal& rhs) {
  if (!(prec_ < rhs.prec_)) {
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this - rhs;
}

HPReal& HPReal::operator*=(const HPReal& rhs) {
  if (!(prec_ < rhs.prec_)) {
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this * rhs;
}

HPReal& HPReal::operator/=(const HPReal& rhs) {
  if (!(prec_ < rhs.prec_)) {
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this / rhs;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
  HPReal r(max(a.prec_, b.prec_));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
  HPReal r(max(a.prec_, b.prec_));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPReal operator*(const HPReal& a, const HPReal& b) {
  HPReal r(max(a.prec_, b.prec_));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  HPReal r(max(a.prec_, b.prec_));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPReal operator-(const HPReal& a) {
  HPReal r(a.prec_);
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

HPReal operator*(long a, const HPReal& b) {
  HPReal r(b.prec_);
  mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN);
  return r;
}

HPReal operator/(const HPReal& a, long b) {
  HPReal r(a.prec_);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

bool operator==(const HPReal& a, const HPReal& b) noexcept {
  return mpfr_equal_p(a.v_, b.v_) != 0;
}

bool operator!=(const HPReal& a, const HPReal& b) noexcept {
  return !(a == b);
}

bool operator<(const HPReal& a, const HPReal& b) noexcept {
  return mpfr_less_p(a.v_, b.v_) != 0;
}

bool operator<=(const HPReal& a, const HPReal& b) noexcept {
  return mpfr_lessequal_p(a.v_, b.v_) != 0;
}

bool operator>(const HPReal& a, const HPReal& b) noexcept {
  return mpfr_greater_p(a.v_, b.v_) != 0;
}

bool operator>=(const HPReal& a, const HPReal& b) noexcept {
  return mpfr_greaterequal_p(a.v_, b.v_) != 0;
}

HPReal abs(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal sqrt(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal hypot(const HPReal& x, const HPReal& y) {
  HPReal r(max(x.precision(), y.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal log(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal cos(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal sin(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal max(const HPReal& a, const HPReal& b) {
  return a < b ? b : a;
}

HPReal min(const HPReal& a, const HPReal& b) {
  return b < a ? b : a;
}

HPReal pi(Precision p) {
  HPReal r(p);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

HPReal pow10(long exponent, Precision p) {
  HPReal ten(10, p);
  HPReal r(p);
  mpfr_pow_si(r.raw(), ten.raw(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace hypcert
