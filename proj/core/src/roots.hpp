#pragma once

#include <complex>
#include <vector>

namespace fflambda::detail {

// Roots of sum c_i z^i (c.back() != 0): companion-matrix eigenvalues, each
// polished by Newton steps in long double while the residual decreases.
std::vector<std::complex<double>> polynomial_roots(const std::vector<long double>& c);

}  // namespace fflambda::detail
