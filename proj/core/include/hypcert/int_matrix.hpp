#pragma once

#include <gmpxx.h>

#include <vector>

namespace hypcert {

// Dense matrix of arbitrary-size integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  mpz_class& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix sub_rows(int first, int count) const;
  IntMatrix sub_cols(int first, int count) const;
  std::vector<mpz_class> row(int r) const;
  void append_row(const std::vector<mpz_class>& values);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> e_;
};

// Rank over the rationals, computed exactly by fraction-free (Bareiss)
// elimination. No overflow and no tolerance is involved.
int exact_rank(const IntMatrix& m);

// Row vector p * meridian + q * longitude for a Dehn surgery with coprime
// coefficients. Throws NotCoprime when gcd(p, q) != 1 (this also rejects
// p = q = 0).
std::vector<mpz_class> combine_surgery(const std::vector<mpz_class>& meridian,
                                       const std::vector<mpz_class>& longitude,
                                       const mpz_class& p, const mpz_class& q);

}  // namespace hypcert
