#pragma once

#include <array>
#include <complex>

namespace whitehead {

/// Principal cube root: argument in (-pi/3, pi/3]; cbrt(0) == 0.
std::complex<double> principal_cbrt(std::complex<double> z);

/// Roots of c3 x^3 + c2 x^2 + c1 x + c0 (with multiplicity) by Cardano's
/// formula on the depressed cubic, each root polished by two Newton steps.
/// Throws std::invalid_argument when c3 == 0.
std::array<std::complex<double>, 3> solve_cubic(std::complex<double> c3, std::complex<double> c2,
                                                std::complex<double> c1, std::complex<double> c0);

}  // namespace whitehead
