#include "hypcert/int_matrix.hpp"

#include <utility>

#include "hypcert/errors.hpp"

namespace hypcert {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) {
    return IntMatrix();
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c) {
      throw DimensionMismatch("ragged rows in integer matrix");
    }
    for (int j = 0; j < c; ++j) {
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return m;
}

IntMatrix IntMatrix::sub_rows(int first, int count) const {
  IntMatrix m(count, cols_);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < cols_; ++j) {
      m.at(i, j) = at(first + i, j);
    }
  }
  return m;
}

IntMatrix IntMatrix::sub_cols(int first, int count) const {
  IntMatrix m(rows_, count);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < count; ++j) {
      m.at(i, j) = at(i, first + j);
    }
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(int r) const {
  std::vector<mpz_class> out(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) {
    out[static_cast<size_t>(j)] = at(r, j);
  }
  return out;
}

void IntMatrix::append_row(const std::vector<mpz_class>& values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = static_cast<int>(values.size());
  }
  if (static_cast<int>(values.size()) != cols_) {
    throw DimensionMismatch("appended row width disagrees with the matrix");
  }
  e_.insert(e_.end(), values.begin(), values.end());
  ++rows_;
}

int exact_rank(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  if (rows == 0 || cols == 0) {
    return 0;
  }
  IntMatrix w = m;
  mpz_class prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) {
        std::swap(w.at(pivot, j), w.at(rank, j));
      }
    }
    const mpz_class piv = w.at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = w.at(r, j) * piv - w.at(r, col) * w.at(rank, j);
        mpz_divexact(w.at(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(r, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::vector<mpz_class> combine_surgery(const std::vector<mpz_class>& meridian,
                                       const std::vector<mpz_class>& longitude,
                                       const mpz_class& p, const mpz_class& q) {
  if (meridian.size() != longitude.size()) {
    throw DimensionMismatch("meridian and longitude rows differ in width");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) {
    throw NotCoprime("surgery coefficients must be coprime and not both zero");
  }
  std::vector<mpz_class> out(meridian.size());
  for (size_t j = 0; j < meridian.size(); ++j) {
    out[j] = p * meridian[j] + q * longitude[j];
  }
  return out;
}

}  // namespace hypcert
