#pragma once

#include <vector>

#include "hypcert/hp_complex.hpp"

namespace hypcert {

// Dense complex matrix in row-major order.
class HPMatrix {
 public:
  HPMatrix() = default;
  HPMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  HPMatrix(int rows, int cols, Precision p)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, HPComplex(p)) {}

  static HPMatrix identity(int n, Precision p);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  HPComplex& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const HPComplex& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  // Largest precision carried by any entry; elimination tolerances are
  // expressed relative to this digit count.
  Precision working_precision() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<HPComplex> e_;
};

// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
// pivot magnitude falls to or below 10^-(P-10) times the largest entry
// magnitude of the input, where P is the working precision in digits.
std::vector<HPComplex> solve_linear(const HPMatrix& a, const std::vector<HPComplex>& rhs);
HPMatrix invert(const HPMatrix& a);

// Determinant by the same elimination. An exactly zero pivot column yields
// an exact zero determinant rather than an error.
HPComplex determinant(const HPMatrix& a);

HPMatrix multiply(const HPMatrix& a, const HPMatrix& b);
std::vector<HPComplex> multiply(const HPMatrix& a, const std::vector<HPComplex>& v);
HPMatrix conjugate_transpose(const HPMatrix& a);
HPReal max_entry_abs(const HPMatrix& a);
HPReal frobenius_norm(const HPMatrix& a);
HPReal euclidean_norm(const std::vector<HPComplex>& v);

}  // namespace hypcert
