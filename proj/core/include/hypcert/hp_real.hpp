#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "hypcert/precision.hpp"

namespace hypcert {

// Arbitrary-precision real scalar with value semantics. Every value carries
// its own working precision; binary operations allocate the result at the
// larger precision of the two operands. There is no global rounding state.
class HPReal {
 public:
  // Exact zero. Zero loses nothing at any precision, so the minimum is fine.
  HPReal() : HPReal(Precision(Precision::kMinDigits)) {}
  explicit HPReal(Precision p);
  HPReal(long value, Precision p);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  // Parses a decimal literal (optional sign, digits, optional fraction,
  // optional E exponent). Throws ParseError on trailing garbage.
  static HPReal from_decimal(std::string_view text, Precision p);

  Precision precision() const noexcept { return prec_; }
  int sign() const noexcept;
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  double to_double() const noexcept;

  // Renders the value with the given number of significant digits, using
  // fixed notation near magnitude one and scientific notation otherwise.
  std::string to_decimal(int significant_digits) const;

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);

  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a);
  friend HPReal operator*(long a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, long b);

  friend bool operator==(const HPReal& a, const HPReal& b) noexcept;
  friend bool operator!=(const HPReal& a, const HPReal& b) noexcept;
  friend bool operator<(const HPReal& a, const HPReal& b) noexcept;
  friend bool operator<=(const HPReal& a, const HPReal& b) noexcept;
  friend bool operator>(const HPReal& a, const HPReal& b) noexcept;
  friend bool operator>=(const HPReal& a, const HPReal& b) noexcept;

 private:
  mpfr_t v_;
  Precision prec_;
};

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal hypot(const HPReal& x, const HPReal& y);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal log(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal max(const HPReal& a, const HPReal& b);
HPReal min(const HPReal& a, const HPReal& b);
HPReal pi(Precision p);

// 10^exponent, exact within the precision. Used for tolerance thresholds.
HPReal pow10(long exponent, Precision p);

}  // namespace hypcert
