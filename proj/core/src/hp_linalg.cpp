#include "hypcert/hp_linalg.hpp"

#include <utility>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

// One elimination pass over the augmented matrix [a | extra]. Rows are
// swapped for the largest pivot in each column. Returns the permutation
// sign; a null tolerance means "report exact zero pivots via *singular
// instead of throwing".
int eliminate(HPMatrix& m, int n, const HPReal* tolerance, bool* singular) {
  int sign = 1;
  if (singular != nullptr) {
    *singular = false;
  }
  const int width = m.cols();
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    HPReal pivot_mag = abs(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      HPReal mag = abs(m.at(r, col));
      if (pivot_mag < mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (tolerance != nullptr) {
      if (!(pivot_mag > *tolerance)) {
        throw SingularMatrix("pivot magnitude below trust threshold in column " +
                             std::to_string(col + 1));
      }
    } else if (pivot_mag.is_zero()) {
      *singular = true;
      return sign;
    }
    if (pivot_row != col) {
      for (int c = 0; c < width; ++c) {
        std::swap(m.at(col, c), m.at(pivot_row, c));
      }
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) {
        continue;
      }
      HPComplex factor = m.at(r, col) / m.at(col, col);
      for (int c = col + 1; c < width; ++c) {
        m.at(r, c) -= factor * m.at(col, c);
      }
      m.at(r, col) = HPComplex();
    }
  }
  return sign;
}

void back_substitute(HPMatrix& m, int n) {
  const int width = m.cols();
  for (int col = n - 1; col >= 0; --col) {
    for (int c = n; c < width; ++c) {
      HPComplex sum = m.at(col, c);
      for (int j = col + 1; j < n; ++j) {
        sum -= m.at(col, j) * m.at(j, c);
      }
      m.at(col, c) = sum / m.at(col, col);
    }
  }
}

HPReal pivot_tolerance(const HPMatrix& a) {
  Precision p = a.working_precision();
  return pow10(-(p.digits() - 10), p) * max_entry_abs(a);
}

}  // namespace

HPMatrix HPMatrix::identity(int n, Precision p) {
  HPMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = HPComplex(1, 0, p);
  }
  return m;
}

Precision HPMatrix::working_precision() const {
  Precision p(Precision::kMinDigits);
  for (const HPComplex& z : e_) {
    p = max(p, z.precision());
  }
  return p;
}

std::vector<HPComplex> solve_linear(const HPMatrix& a, const std::vector<HPComplex>& rhs) {
  if (a.rows() != a.cols() || static_cast<int>(rhs.size()) != a.rows()) {
    throw DimensionMismatch("solve_linear needs a square matrix and a matching vector");
  }
  const int n = a.rows();
  HPMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      aug.at(r, c) = a.at(r, c);
    }
    aug.at(r, n) = rhs[static_cast<size_t>(r)];
  }
  HPReal tol = pivot_tolerance(a);
  eliminate(aug, n, &tol, nullptr);
  back_substitute(aug, n);
  std::vector<HPComplex> x;
  x.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    x.push_back(aug.at(r, n));
  }
  return x;
}

HPMatrix invert(const HPMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("invert needs a square matrix");
  }
  const int n = a.rows();
  Precision p = a.working_precision();
  HPMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      aug.at(r, c) = a.at(r, c);
    }
    aug.at(r, n + r) = HPComplex(1, 0, p);
  }
  HPReal tol = pivot_tolerance(a);
  eliminate(aug, n, &tol, nullptr);
  back_substitute(aug, n);
  HPMatrix inv(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      inv.at(r, c) = aug.at(r, n + c);
    }
  }
  return inv;
}

HPComplex determinant(const HPMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("determinant needs a square matrix");
  }
  const int n = a.rows();
  Precision p = a.working_precision();
  if (n == 0) {
    return HPComplex(1, 0, p);
  }
  HPMatrix work(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      work.at(r, c) = a.at(r, c);
    }
  }
  bool singular = false;
  int sign = eliminate(work, n, nullptr, &singular);
  if (singular) {
    return HPComplex(p);
  }
  HPComplex det(static_cast<long>(sign), 0, p);
  for (int i = 0; i < n; ++i) {
    det = det * work.at(i, i);
  }
  return det;
}

HPMatrix multiply(const HPMatrix& a, const HPMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product shape mismatch");
  }
  HPMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      HPComplex sum;
      for (int m = 0; m < a.cols(); ++m) {
        sum += a.at(i, m) * b.at(m, j);
      }
      r.at(i, j) = std::move(sum);
    }
  }
  return r;
}

std::vector<HPComplex> multiply(const HPMatrix& a, const std::vector<HPComplex>& v) {
  if (a.cols() != static_cast<int>(v.size())) {
    throw DimensionMismatch("matrix-vector product shape mismatch");
  }
  std::vector<HPComplex> r;
  r.reserve(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    HPComplex sum;
    for (int j = 0; j < a.cols(); ++j) {
      sum += a.at(i, j) * v[static_cast<size_t>(j)];
    }
    r.push_back(std::move(sum));
  }
  return r;
}

HPMatrix conjugate_transpose(const HPMatrix& a) {
  HPMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      r.at(j, i) = conj(a.at(i, j));
    }
  }
  return r;
}

HPReal max_entry_abs(const HPMatrix& a) {
  HPReal best;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      best = max(best, abs(a.at(i, j)));
    }
  }
  return best;
}

HPReal frobenius_norm(const HPMatrix& a) {
  HPReal sum;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      sum += norm_sqr(a.at(i, j));
    }
  }
  return sqrt(sum);
}

HPReal euclidean_norm(const std::vector<HPComplex>& v) {
  HPReal sum;
  for (const HPComplex& z : v) {
    sum += norm_sqr(z);
  }
  return sqrt(sum);
}

}  // namespace hypcert
