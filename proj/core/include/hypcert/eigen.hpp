#pragma once

#include <vector>

#include "hypcert/hp_linalg.hpp"

namespace hypcert {

// Monic characteristic polynomial det(xI - M), coefficients low-first.
// Computed by a pivoted similarity reduction to Hessenberg form followed by
// the leading-minor recurrence, all at roughly doubled internal precision so
// that coefficient rounding stays far below the caller's digit budget.
std::vector<HPComplex> characteristic_polynomial(const HPMatrix& m);

// Eigenvalues of a matrix that is Hermitian positive definite by
// construction, sorted ascending, at the precision of the input. The roots
// of the characteristic polynomial are checked rather than trusted: an
// imaginary part above 10^-(P/2) * (1 + |root|) raises NotHermitian and a
// nonpositive real part raises NonPositiveEigenvalue.
std::vector<HPReal> hermitian_eigenvalues(const HPMatrix& d);

}  // namespace hypcert
