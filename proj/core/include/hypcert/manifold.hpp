#pragma once

#include <string>
#include <vector>

#include "hypcert/hp_complex.hpp"
#include "hypcert/int_matrix.hpp"

namespace hypcert {

// One tetrahedron shape as printed by the solver: decimal strings kept
// verbatim so that serialization reproduces the input digits exactly. The
// imaginary string carries its own leading minus when negative; an empty
// component means the literal did not mention it.
struct ShapeDecimal {
  std::string re;
  std::string im;

  HPComplex to_complex(Precision p) const;
  std::string literal() const;
};

// A triangulated cusped manifold with its filling/gluing data: n shapes and
// an (n + k) x (2n + 1) integer coefficient matrix whose first k rows are
// cusp equations (h of them unsurgered meridians, k - h surgery
// combinations) and whose remaining n rows are edge consistency equations.
struct ManifoldProblem {
  std::string name;
  int n = 0;
  int k = 0;
  int h = 0;
  std::vector<ShapeDecimal> shapes;
  std::vector<HPComplex> shape_values;  // set instead of literals by the
                                        // programmatic constructor
  IntMatrix fg;

  // Shape values at precision p, validated to lie in the upper half plane.
  std::vector<HPComplex> shapes_at(Precision p) const;
};

// Validates dimensions (fg is (n + k) x (2n + 1) with n >= 1, 1 <= k <= n,
// 0 <= h <= k, shapes length n) and geometricity of every shape. Throws
// DimensionMismatch or NonGeometricShape.
ManifoldProblem assemble(std::string name, std::vector<ShapeDecimal> shapes,
                         IntMatrix fg, int h);
ManifoldProblem assemble(std::string name, std::vector<HPComplex> shapes,
                         IntMatrix fg, int h);

}  // namespace hypcert
