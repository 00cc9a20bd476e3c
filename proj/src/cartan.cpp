#include "sl2c/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sl2c {

namespace {

// LU with partial pivoting; n <= 7.
double determinant(std::array<std::array<double, 6>, 6> a) {
  constexpr int n = 6;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < n; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace

CMat KakFactors::compose() const { return k_left * a_matrix(x) * k_right; }

CMat a_matrix(double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("a_matrix: x must be >= 1");
  return CMat::from2x2(x, 0.0, 0.0, 1.0 / x);
}

KakFactors kak_decompose(const CMat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("kak_decompose: expected 2x2");
  if (!m.all_finite()) throw std::invalid_argument("kak_decompose: non-finite input");
  if (std::abs(det2(m) - 1.0) > 1e-8) {
    throw std::invalid_argument("kak_decompose: determinant is not 1");
  }
  const Svd2 svd = svd2(m);
  if (!(svd.s2 > 0.0)) throw std::invalid_argument("kak_decompose: singular input");

  const Complex half_phase = std::sqrt(det2(svd.u) / std::abs(det2(svd.u)));
  KakFactors out;
  out.k_left = svd.u * (1.0 / half_phase);
  out.k_right = svd.v * half_phase;
  out.x = std::max(1.0, svd.s1);
  return out;
}

double haar_density_r(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("haar_density_r: r must be >= 0");
  const double s = std::sinh(r);
  return s * s;
}

double measure_factor_x(double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("measure_factor_x: x must be >= 1");
  const double q = 0.5 * (x * x - 1.0 / (x * x));
  return 2.0 * q * q / x;
}

JacobianMatrix jacobian_matrix(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("jacobian_matrix: r must be >= 0");
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  JacobianMatrix j{};
  j[0][0] = c;
  j[0][1] = 1.0;
  j[1][0] = -s;
  j[2][2] = c;
  j[2][3] = 1.0;
  j[3][2] = -s;
  j[4][4] = 1.0;
  j[4][5] = 1.0;
  j[5][6] = 1.0;
  return j;
}

double jacobian_minor(double r, int removed_column) {
  if (removed_column < 0 || removed_column > 6) {
    throw std::invalid_argument("jacobian_minor: column index out of range");
  }
  const JacobianMatrix j = jacobian_matrix(r);
  std::array<std::array<double, 6>, 6> minor{};
  for (int row = 0; row < 6; ++row) {
    int dst = 0;
    for (int col = 0; col < 7; ++col) {
      if (col == removed_column) continue;
      minor[row][dst++] = j[row][col];
    }
  }
  return std::abs(determinant(minor));
}

}  // namespace sl2c
