#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hypcert/certify.hpp"
#include "hypcert/hp_linalg.hpp"
#include "hypcert/int_matrix.hpp"
#include "hypcert/selection.hpp"
#include "test_support.hpp"

using hypcert::HPComplex;
using hypcert::HPMatrix;
using hypcert::HPReal;
using hypcert::IntMatrix;
using hypcert::Precision;

namespace {

// Sixteenths in [-50/16, 50/16], with the diagonal shifted to keep the
// matrix comfortably nonsingular.
HPMatrix random_dominant_matrix(std::mt19937_64& rng, int n, Precision p) {
  std::uniform_int_distribution<int> num(-50, 50);
  HPMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      HPReal re = HPReal(num(rng), p) / 16;
      HPReal im = HPReal(num(rng), p) / 16;
      if (i == j) {
        re += HPReal(8 * n, p);
      }
      m.at(i, j) = HPComplex(std::move(re), std::move(im));
    }
  }
  return m;
}

std::vector<HPComplex> random_vector(std::mt19937_64& rng, int n, Precision p) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::vector<HPComplex> v;
  v.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v.emplace_back(HPReal(num(rng), p) / 16, HPReal(num(rng), p) / 16);
  }
  return v;
}

// Rank over the rationals by plain fraction elimination, as an independent
// check on the fraction-free integer path.
int rational_rank(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<mpq_class>> w(static_cast<size_t>(rows),
                                        std::vector<mpq_class>(static_cast<size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      w[static_cast<size_t>(i)][static_cast<size_t>(j)] = mpq_class(m.at(i, j));
    }
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (w[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      mpq_class factor = w[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         w[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (int j = col; j < cols; ++j) {
        w[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
            factor * w[static_cast<size_t>(rank)][static_cast<size_t>(j)];
      }
    }
    ++rank;
  }
  return rank;
}

hypcert::SelectedSystem random_system(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  IntMatrix t(n, 2 * n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2 * n + 1; ++j) {
      t.at(i, j) = coef(rng);
    }
  }
  hypcert::SelectedSystem sys;
  sys.t = std::move(t);
  sys.n = n;
  sys.k = 0;
  sys.h = 0;
  return sys;
}

std::vector<HPComplex> random_shapes(std::mt19937_64& rng, int n, Precision p) {
  std::uniform_int_distribution<int> re_num(-100, 100);
  std::uniform_int_distribution<int> im_num(30, 150);
  std::vector<HPComplex> a;
  a.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    a.emplace_back(HPReal(re_num(rng), p) / 100, HPReal(im_num(rng), p) / 100);
  }
  return a;
}

}  // namespace

TEST_CASE("the spectral bound never exceeds the frobenius bound") {
  std::mt19937_64 rng(0x5eed0001);
  Precision p(60);
  int checked = 0;
  for (int round = 0; round < 15; ++round) {
    for (int n = 2; n <= 8; ++n) {
      HPMatrix m = random_dominant_matrix(rng, n, p);
      HPReal ns = hypcert::inverse_norm_sup(m);
      HPReal nl = hypcert::inverse_norm_len(m);
      CAPTURE(round);
      CAPTURE(n);
      CHECK(ns <= nl + nl * pow10(-30, p));
      CHECK(ns > HPReal());
      ++checked;
    }
  }
  CHECK(checked == 105);
}

TEST_CASE("the analytic jacobian matches central differences") {
  std::mt19937_64 rng(0x5eed0002);
  Precision p(60);
  const HPReal eps = pow10(-20, p);
  const HPReal floor_mag = pow10(-30, p);
  const HPReal rel_cap = pow10(-15, p);
  int checked = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const int n = 1 + instance % 4;
    hypcert::SelectedSystem sys = random_system(rng, n);
    std::vector<HPComplex> a = random_shapes(rng, n, p);
    HPMatrix jac = hypcert::jacobian(sys, a);

    HPComplex scale(HPReal(1, p) / (2 * eps), HPReal(p));
    for (int j = 0; j < n; ++j) {
      std::vector<HPComplex> plus = a;
      std::vector<HPComplex> minus = a;
      plus[static_cast<size_t>(j)].re += eps;
      minus[static_cast<size_t>(j)].re -= eps;
      hypcert::Residual fp = hypcert::evaluate_residual(sys, plus);
      hypcert::Residual fm = hypcert::evaluate_residual(sys, minus);
      for (int i = 0; i < n; ++i) {
        HPComplex fd = (fp.b[static_cast<size_t>(i)] - fm.b[static_cast<size_t>(i)]) * scale;
        const HPComplex& exact = jac.at(i, j);
        CAPTURE(instance);
        CAPTURE(i);
        CAPTURE(j);
        if (abs(exact) < floor_mag) {
          CHECK(abs(fd) < floor_mag);
        } else {
          CHECK(abs(fd - exact) / abs(exact) < rel_cap);
        }
        ++checked;
      }
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937_64 rng(0x5eed0003);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int instance = 0; instance < 120; ++instance) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    const int planted = 1 + instance % std::min(rows, cols);
    IntMatrix left(rows, planted);
    IntMatrix right(planted, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < planted; ++j) {
        left.at(i, j) = entry(rng);
      }
    }
    for (int i = 0; i < planted; ++i) {
      for (int j = 0; j < cols; ++j) {
        right.at(i, j) = entry(rng);
      }
    }
    IntMatrix product(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        mpz_class sum = 0;
        for (int m = 0; m < planted; ++m) {
          sum += left.at(i, m) * right.at(m, j);
        }
        product.at(i, j) = sum;
      }
    }
    CAPTURE(instance);
    const int got = hypcert::exact_rank(product);
    CHECK(got == rational_rank(product));
    CHECK(got <= planted);
  }
}

TEST_CASE("linear solves leave residuals at rounding level") {
  std::mt19937_64 rng(0x5eed0004);
  Precision p(60);
  const HPReal one(1, p);
  for (int instance = 0; instance < 100; ++instance) {
    const int n = 2 + instance % 7;
    HPMatrix m = random_dominant_matrix(rng, n, p);
    std::vector<HPComplex> rhs = random_vector(rng, n, p);
    std::vector<HPComplex> x = hypcert::solve_linear(m, rhs);
    std::vector<HPComplex> mx = hypcert::multiply(m, x);
    for (int i = 0; i < n; ++i) {
      mx[static_cast<size_t>(i)] -= rhs[static_cast<size_t>(i)];
    }
    HPReal residual = hypcert::euclidean_norm(mx);
    HPReal cap = pow10(-50, p) * max(one, hypcert::euclidean_norm(rhs));
    CAPTURE(instance);
    CAPTURE(n);
    CHECK(residual <= cap);
  }
}
