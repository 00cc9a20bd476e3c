#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sl2c {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense complex matrix, row-major.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);
  CMat(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMat(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static CMat identity(std::size_t n);
  static CMat diagonal(std::span<const Complex> d);
  static CMat from2x2(Complex a, Complex b, Complex c, Complex d) {
    return CMat(2, 2, {a, b, c, d});
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  CMat adjoint() const;
  CMat conjugate() const;
  CMat transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  CMat& operator+=(const CMat& other);
  CMat& operator-=(const CMat& other);
  CMat& operator*=(Complex s);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, Complex s) { return a *= s; }
  friend CMat operator*(Complex s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CVec operator*(const CMat& m, std::span<const Complex> v);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMat& a, const CMat& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

CMat kron(const CMat& a, const CMat& b);

/// m ⊗ m ⊗ ... ⊗ m (t factors), materialized.
CMat kron_power(const CMat& m, int t);

/// Computes (m^{⊗t}) v for a 2×2 m without forming the 2^t × 2^t matrix.
/// Tensor legs are ordered most-significant-bit first, matching kron().
CVec kron_power_apply(const CMat& m, int t, std::span<const Complex> v);

Complex det2(const CMat& m);

/// m = u · diag(s1, s2) · v with u, v unitary and s1 >= s2 >= 0.
struct Svd2 {
  CMat u;
  double s1 = 0.0;
  double s2 = 0.0;
  CMat v;
};

Svd2 svd2(const CMat& m);

/// Largest singular value of a 2×2 matrix.
double op_norm(const CMat& m);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // conj(a)·b
double norm2(std::span<const Complex> v);

/// Pairwise (tree) summation; error grows as O(log n).
double pairwise_sum(std::span<const double> xs);
Complex pairwise_sum(std::span<const Complex> xs);

}  // namespace sl2c
