#include "hypcert/eigen.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypcert/errors.hpp"
#include "hypcert/poly_roots.hpp"

namespace hypcert {

namespace {

HPMatrix upcast(const HPMatrix& m, Precision p) {
  HPMatrix r(m.rows(), m.cols(), p);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      HPReal re(p);
      HPReal im(p);
      mpfr_set(re.raw(), m.at(i, j).re.raw(), MPFR_RNDN);
      mpfr_set(im.raw(), m.at(i, j).im.raw(), MPFR_RNDN);
      r.at(i, j) = HPComplex(std::move(re), std::move(im));
    }
  }
  return r;
}

// Similarity reduction to upper Hessenberg form with the largest available
// subdiagonal entry as the pivot in each column.
void hessenberg_reduce(HPMatrix& h) {
  const int n = h.rows();
  for (int m = 0; m + 2 < n; ++m) {
    int pivot = m + 1;
    HPReal best = abs(h.at(m + 1, m));
    for (int r = m + 2; r < n; ++r) {
      HPReal mag = abs(h.at(r, m));
      if (best < mag) {
        best = mag;
        pivot = r;
      }
    }
    if (best.is_zero()) {
      continue;
    }
    if (pivot != m + 1) {
      for (int c = 0; c < n; ++c) {
        std::swap(h.at(m + 1, c), h.at(pivot, c));
      }
      for (int r = 0; r < n; ++r) {
        std::swap(h.at(r, m + 1), h.at(r, pivot));
      }
    }
    std::vector<HPComplex> t(static_cast<size_t>(n));
    for (int i = m + 2; i < n; ++i) {
      t[static_cast<size_t>(i)] = h.at(i, m) / h.at(m + 1, m);
    }
    for (int i = m + 2; i < n; ++i) {
      const HPComplex& ti = t[static_cast<size_t>(i)];
      if (ti.is_zero()) {
        continue;
      }
      for (int c = m + 1; c < n; ++c) {
        h.at(i, c) -= ti * h.at(m + 1, c);
      }
      h.at(i, m) = HPComplex();
    }
    for (int i = m + 2; i < n; ++i) {
      const HPComplex& ti = t[static_cast<size_t>(i)];
      if (ti.is_zero()) {
        continue;
      }
      for (int r = 0; r < n; ++r) {
        h.at(r, m + 1) += ti * h.at(r, i);
      }
    }
  }
}

// Characteristic polynomials of the leading minors of a Hessenberg matrix
// satisfy p_m = (x - h_mm) p_{m-1} - sum_i h_im * (prod of subdiagonals) *
// p_{i-1}; the final one is det(xI - H).
std::vector<HPComplex> hessenberg_charpoly(const HPMatrix& h, Precision p) {
  const int n = h.rows();
  std::vector<std::vector<HPComplex>> ps;
  ps.reserve(static_cast<size_t>(n) + 1);
  ps.push_back({HPComplex(1, 0, p)});
  for (int m = 1; m <= n; ++m) {
    const std::vector<HPComplex>& prev = ps.back();
    std::vector<HPComplex> pm(static_cast<size_t>(m) + 1, HPComplex(p));
    const HPComplex& diag = h.at(m - 1, m - 1);
    for (size_t k = 0; k < prev.size(); ++k) {
      pm[k + 1] += prev[k];
      pm[k] -= diag * prev[k];
    }
    HPComplex chain(1, 0, p);
    for (int i = m - 1; i >= 1; --i) {
      chain = chain * h.at(i, i - 1);
      if (chain.is_zero()) {
        break;
      }
      HPComplex weight = h.at(i - 1, m - 1) * chain;
      if (weight.is_zero()) {
        continue;
      }
      const std::vector<HPComplex>& pi = ps[static_cast<size_t>(i) - 1];
      for (size_t k = 0; k < pi.size(); ++k) {
        pm[k] -= weight * pi[k];
      }
    }
    ps.push_back(std::move(pm));
  }
  return ps.back();
}

}  // namespace

std::vector<HPComplex> characteristic_polynomial(const HPMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("characteristic polynomial needs a square matrix");
  }
  Precision base = m.working_precision();
  Precision work(2 * base.digits() + 10);
  HPMatrix h = upcast(m, work);
  hessenberg_reduce(h);
  return hessenberg_charpoly(h, work);
}

std::vector<HPReal> hermitian_eigenvalues(const HPMatrix& d) {
  if (d.rows() != d.cols()) {
    throw DimensionMismatch("eigenvalue computation needs a square matrix");
  }
  const int n = d.rows();
  Precision base = d.working_precision();
  if (n == 0) {
    return {};
  }
  std::vector<HPComplex> roots = polynomial_roots(characteristic_polynomial(d));

  Precision work = roots.front().precision();
  HPReal imag_scale = pow10(-(base.digits() / 2), work);
  HPReal one(1, work);
  std::vector<HPReal> values;
  values.reserve(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    const HPComplex& root = roots[i];
    if (abs(root.im) > imag_scale * (one + abs(root))) {
      throw NotHermitian("eigenvalue " + std::to_string(i + 1) +
                         " has an imaginary part beyond the self-adjoint bound");
    }
    if (!(root.re > HPReal())) {
      throw NonPositiveEigenvalue("eigenvalue " + std::to_string(i + 1) +
                                  " is not positive");
    }
    HPReal value(base);
    mpfr_set(value.raw(), root.re.raw(), MPFR_RNDN);
    values.push_back(std::move(value));
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace hypcert
