#pragma once

#include <cstddef>

#include "tfbs/matrix.hpp"

namespace tfbs {

/// Standard cubic B-spline centred at node j on a uniform mesh with spacing h,
/// evaluated at arbitrary s (piecewise cubic on [s_{j-2}, s_{j+2}]).
double spline_value(int j, double s, double s0, double h);
double spline_deriv(int j, double s, double s0, double h);
double spline_deriv2(int j, double s, double s0, double h);

/// Boundary-modified basis function j in {0..M}, a fixed linear combination of
/// standard splines near each end and the plain spline in the interior.
double modified_basis_eval(int j, double s, int M, double s0, double h);
double modified_basis_deriv(int j, double s, int M, double s0, double h);

/// Collocation matrix of modified-basis node values (row i = basis i at nodes).
/// Requires M >= 8.
DenseMatrix assemble_A(int M);
/// Node values of the modified-basis first derivatives, unit spacing.
DenseMatrix assemble_B(int M);

/// First-derivative quadrature weights, unit spacing: X = (A^{-1} B)^T.
DenseMatrix compute_X(int M);
/// Second-derivative weights as the square of X.
DenseMatrix compute_Y(const DenseMatrix& X);

/// Unit-spacing weight pair; physical weights are X/h and Y/h^2.
struct WeightMatrices {
    int M;
    DenseMatrix X;
    DenseMatrix Y;
};

WeightMatrices make_weight_matrices(int M);

}  // namespace tfbs
