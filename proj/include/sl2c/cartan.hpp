#pragma once

#include <array>

#include "sl2c/matrix.hpp"

namespace sl2c {

/// g = k_left · A_x · k_right with k_left, k_right in SU(2) and x >= 1.
struct KakFactors {
  CMat k_left;
  double x = 1.0;
  CMat k_right;

  CMat compose() const;
};

/// diag(x, 1/x); rejects x < 1.
CMat a_matrix(double x);

/// Cartan decomposition of an SL(2,C) element.
///
/// Singular values come out of svd2 in descending order; the determinant phase
/// e^{iθ} of the left SVD factor is removed with a scalar e^{-iθ/2} and the
/// inverse scalar is pushed into the right factor, so both land in SU(2).
/// Throws std::invalid_argument if |det(m) - 1| > 1e-8 or m is singular.
KakFactors kak_decompose(const CMat& m);

/// Density of the Haar measure on the non-compact factor in the r coordinate: sinh²(r).
double haar_density_r(double r);

/// The same density after the substitution x = e^{r/2}: 2((x² - x⁻²)/2)² / x.
double measure_factor_x(double x);

/// 6×7 real matrix of the differential of (K, A, K') ↦ A_r⁻¹ exp(K) A_r exp(A) exp(K')
/// at zero, with entries cosh r, sinh r and ones. Columns follow the basis
/// iσx, iσy, iσz, σz, iσx', iσy', iσz'; rows follow iσy, σx, iσx, σy, iσz, σz.
using JacobianMatrix = std::array<std::array<double, 7>, 6>;
JacobianMatrix jacobian_matrix(double r);

/// |det| of the 6×6 minor obtained by deleting column `removed_column`
/// (zero-based) from jacobian_matrix(r). Deleting column 5 or 4 gives sinh²(r).
double jacobian_minor(double r, int removed_column = 5);

}  // namespace sl2c
