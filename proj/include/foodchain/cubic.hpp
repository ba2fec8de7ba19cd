#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace foodchain {

// Roots of the monic cubic x^3 + c2 x^2 + c1 x + c0 with real coefficients.
// Three real roots are returned with zero imaginary part; otherwise one real
// root and a conjugate pair. Real roots are Newton-polished on the original
// cubic.
std::array<std::complex<double>, 3> solve_cubic(double c2, double c1,
                                                double c0);

// Coefficients (c2, c1, c0) of det(xI - A) = x^3 + c2 x^2 + c1 x + c0.
std::array<double, 3> char_poly_coeffs(const Eigen::Matrix3d& a);

// Eigenvalues of a 3x3 real matrix via its characteristic cubic.
std::array<std::complex<double>, 3> eigenvalues_3x3(const Eigen::Matrix3d& a);

}  // namespace foodchain
