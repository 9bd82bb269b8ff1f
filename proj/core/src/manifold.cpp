#include "hypcert/manifold.hpp"

#include <utility>

#include "hypcert/errors.hpp"

namespace hypcert {

HPComplex ShapeDecimal::to_complex(Precision p) const {
  HPReal real_part = re.empty() ? HPReal(p) : HPReal::from_decimal(re, p);
  HPReal imag_part = im.empty() ? HPReal(p) : HPReal::from_decimal(im, p);
  return HPComplex(std::move(real_part), std::move(imag_part));
}

std::string ShapeDecimal::literal() const {
  if (im.empty()) {
    return re.empty() ? "0" : re;
  }
  std::string imag = im + "*I";
  if (re.empty()) {
    return imag;
  }
  if (im.front() == '-' || im.front() == '+') {
    return re + imag;
  }
  return re + "+" + imag;
}

std::vector<HPComplex> ManifoldProblem::shapes_at(Precision p) const {
  std::vector<HPComplex> out;
  out.reserve(static_cast<size_t>(n));
  if (!shapes.empty()) {
    for (const ShapeDecimal& s : shapes) {
      out.push_back(s.to_complex(p));
    }
  } else {
    for (const HPComplex& z : shape_values) {
      HPReal re(p);
      HPReal im(p);
      mpfr_set(re.raw(), z.re.raw(), MPFR_RNDN);
      mpfr_set(im.raw(), z.im.raw(), MPFR_RNDN);
      out.emplace_back(std::move(re), std::move(im));
    }
  }
  for (size_t j = 0; j < out.size(); ++j) {
    if (!(out[j].im > HPReal())) {
      throw NonGeometricShape("shape " + std::to_string(j + 1) +
                                  " is not in the upper half plane",
                              static_cast<int>(j + 1));
    }
  }
  return out;
}

namespace {

ManifoldProblem assemble_common(std::string name, size_t shape_count,
                                IntMatrix fg, int h) {
  const int r = fg.rows();
  const int c = fg.cols();
  if (r < 2 || c < 3 || c % 2 == 0) {
    throw DimensionMismatch("filling matrix must be (n + k) x (2n + 1) with n >= 1");
  }
  const int n = (c - 1) / 2;
  if (static_cast<int>(shape_count) != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " shapes, got " +
                            std::to_string(shape_count));
  }
  if (r <= n) {
    throw DimensionMismatch("filling matrix needs cusp rows above the consistency block");
  }
  const int k = r - n;
  if (k > n) {
    throw DimensionMismatch("more cusp rows than tetrahedra");
  }
  if (h < 0 || h > k) {
    throw DimensionMismatch("unsurgered cusp count must lie in [0, k]");
  }
  ManifoldProblem p;
  p.name = std::move(name);
  p.n = n;
  p.k = k;
  p.h = h;
  p.fg = std::move(fg);
  return p;
}

}  // namespace

ManifoldProblem assemble(std::string name, std::vector<ShapeDecimal> shapes,
                         IntMatrix fg, int h) {
  ManifoldProblem p = assemble_common(std::move(name), shapes.size(), std::move(fg), h);
  p.shapes = std::move(shapes);
  p.shapes_at(Precision(Precision::kMinDigits));
  return p;
}

ManifoldProblem assemble(std::string name, std::vector<HPComplex> shapes,
                         IntMatrix fg, int h) {
  ManifoldProblem p = assemble_common(std::move(name), shapes.size(), std::move(fg), h);
  p.shape_values = std::move(shapes);
  p.shapes_at(Precision(Precision::kMinDigits));
  return p;
}

}  // namespace hypcert
