#pragma once

#include <vector>

#include "hypcert/hp_complex.hpp"

namespace hypcert {

// All complex roots of the polynomial sum_k coeffs[k] * x^k, leading
// coefficient nonzero after trimming. Simultaneous Aberth iteration from a
// Newton-polygon start; each root is accepted once the evaluated residual
// drops below the floating noise floor of the coefficient precision, so
// clusters of modest multiplicity land within their rounding-limited disc.
// Throws RootFindingError if the sweep budget runs out.
std::vector<HPComplex> polynomial_roots(const std::vector<HPComplex>& coeffs);

}  // namespace hypcert
