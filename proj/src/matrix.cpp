#include "sl2c/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sl2c {

namespace {

void require_same_shape(const CMat& a, const CMat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

void require_2x2(const CMat& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected a 2x2 matrix");
  }
}

template <class T>
T pairwise_sum_impl(std::span<const T> xs) {
  constexpr std::size_t kLeaf = 8;
  if (xs.size() <= kLeaf) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum_impl(xs.first(half)) + pairwise_sum_impl(xs.subspan(half));
}

double sign_of(double a, double b) { return std::copysign(std::abs(a), b); }

// SVD of the real upper-triangular matrix [[f, g], [0, h]] (LAPACK dlasv2):
//   [ csl snl] [f g] [csr -snr]   [ssmax   0  ]
//   [-snl csl] [0 h] [snr  csr] = [  0   ssmin]
struct RealSvd2 {
  double ssmin, ssmax, snr, csr, snl, csl;
};

RealSvd2 lasv2(double f, double g, double h) {
  constexpr double eps = 0x1p-53;
  double ft = f, fa = std::abs(ft);
  double ht = h, ha = std::abs(h);
  int pmax = 1;
  const bool swap = ha > fa;
  if (swap) {
    pmax = 3;
    std::swap(ft, ht);
    std::swap(fa, ha);
  }
  const double gt = g, ga = std::abs(gt);
  double clt, crt, slt, srt, ssmin, ssmax;
  if (ga == 0.0) {
    ssmin = ha;
    ssmax = fa;
    clt = 1.0;
    crt = 1.0;
    slt = 0.0;
    srt = 0.0;
  } else {
    bool gasmal = true;
    if (ga > fa) {
      pmax = 2;
      if (fa / ga < eps) {
        gasmal = false;
        ssmax = ga;
        ssmin = ha > 1.0 ? fa / (ga / ha) : (fa / ga) * ha;
        clt = 1.0;
        slt = ht / gt;
        srt = 1.0;
        crt = ft / gt;
      }
    }
    if (gasmal) {
      const double d = fa - ha;
      double l = (d == fa) ? 1.0 : d / fa;
      const double m = gt / ft;
      double t = 2.0 - l;
      const double mm = m * m;
      const double tt = t * t;
      const double s = std::sqrt(tt + mm);
      const double r = (l == 0.0) ? std::abs(m) : std::sqrt(l * l + mm);
      const double a = 0.5 * (s + r);
      ssmin = ha / a;
      ssmax = fa * a;
      if (mm == 0.0) {
        t = (l == 0.0) ? sign_of(2.0, ft) * sign_of(1.0, gt) : gt / sign_of(d, ft) + m / t;
      } else {
        t = (m / (s + t) + m / (r + l)) * (1.0 + a);
      }
      l = std::sqrt(t * t + 4.0);
      crt = 2.0 / l;
      srt = t / l;
      clt = (crt + srt * m) / a;
      slt = (ht / ft) * srt / a;
    }
  }
  RealSvd2 out{};
  if (swap) {
    out.csl = srt;
    out.snl = crt;
    out.csr = slt;
    out.snr = clt;
  } else {
    out.csl = clt;
    out.snl = slt;
    out.csr = crt;
    out.snr = srt;
  }
  double tsign = 1.0;
  if (pmax == 1) tsign = sign_of(1.0, out.csr) * sign_of(1.0, out.csl) * sign_of(1.0, f);
  if (pmax == 2) tsign = sign_of(1.0, out.snr) * sign_of(1.0, out.csl) * sign_of(1.0, g);
  if (pmax == 3) tsign = sign_of(1.0, out.snr) * sign_of(1.0, out.snl) * sign_of(1.0, h);
  out.ssmax = sign_of(ssmax, tsign);
  out.ssmin = sign_of(ssmin, tsign * sign_of(1.0, f) * sign_of(1.0, h));
  return out;
}

Complex unit_phase(Complex z) {
  const double a = std::abs(z);
  return a == 0.0 ? Complex{1.0, 0.0} : z / a;
}

}  // namespace

CMat::CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMat: entry count does not match rows*cols");
  }
}

CMat::CMat(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : CMat(rows, cols, std::vector<Complex>(entries)) {}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const Complex> d) {
  CMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMat CMat::conjugate() const {
  CMat out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

CMat CMat::transpose() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex CMat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

double CMat::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& z : entries_) acc += std::norm(z);
  return std::sqrt(acc);
}

bool CMat::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMat& CMat::operator+=(const CMat& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMat& CMat::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimensions differ");
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CVec operator*(const CMat& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  CVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: length mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

CMat kron(const CMat& a, const CMat& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("kron: empty operand");
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CMat kron_power(const CMat& m, int t) {
  if (t < 1) throw std::invalid_argument("kron_power: t must be >= 1");
  CMat out = m;
  for (int k = 1; k < t; ++k) out = kron(out, m);
  return out;
}

CVec kron_power_apply(const CMat& m, int t, std::span<const Complex> v) {
  require_2x2(m, "kron_power_apply");
  if (t < 1 || t > 30) throw std::invalid_argument("kron_power_apply: t out of range");
  const std::size_t dim = std::size_t{1} << t;
  if (v.size() != dim) throw std::invalid_argument("kron_power_apply: vector length must be 2^t");
  CVec out(v.begin(), v.end());
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t stride = 1; stride < dim; stride <<= 1) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t i0 = base + off;
        const std::size_t i1 = i0 + stride;
        const Complex a = out[i0];
        const Complex b = out[i1];
        out[i0] = m00 * a + m01 * b;
        out[i1] = m10 * a + m11 * b;
      }
    }
  }
  return out;
}

Complex det2(const CMat& m) {
  require_2x2(m, "det2");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Svd2 svd2(const CMat& m) {
  require_2x2(m, "svd2");
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);

  // Unitary Givens rotation g with g·m upper triangular and a real non-negative (0,0) entry.
  const double col_norm = std::hypot(std::abs(a), std::abs(c));
  CMat g = CMat::identity(2);
  Complex r12 = b, r22 = d;
  double r11 = 0.0;
  if (col_norm > 0.0) {
    const Complex ga = a / col_norm, gc = c / col_norm;
    g = CMat::from2x2(std::conj(ga), std::conj(gc), -gc, ga);
    r11 = col_norm;
    r12 = std::conj(ga) * b + std::conj(gc) * d;
    r22 = -gc * b + ga * d;
  }

  // r = p1 · real_r · p2 with diagonal phases p1 = diag(1, e^{i(γ-α)}), p2 = diag(1, e^{iα}).
  const Complex ph12 = unit_phase(r12);
  const Complex ph22 = unit_phase(r22);
  const CMat p1 = CMat::from2x2(1.0, 0.0, 0.0, ph22 / ph12);
  const CMat p2 = CMat::from2x2(1.0, 0.0, 0.0, ph12);

  const RealSvd2 rs = lasv2(r11, std::abs(r12), std::abs(r22));
  // real_r = L^T diag(ssmax, ssmin) R^T.
  double s1 = rs.ssmax, s2 = rs.ssmin;
  CMat lt = CMat::from2x2(rs.csl, -rs.snl, rs.snl, rs.csl);
  const CMat rt = CMat::from2x2(rs.csr, rs.snr, -rs.snr, rs.csr);
  if (s1 < 0.0) {
    s1 = -s1;
    lt(0, 0) = -lt(0, 0);
    lt(1, 0) = -lt(1, 0);
  }
  if (s2 < 0.0) {
    s2 = -s2;
    lt(0, 1) = -lt(0, 1);
    lt(1, 1) = -lt(1, 1);
  }

  Svd2 out;
  out.u = g.adjoint() * p1 * lt;
  out.s1 = s1;
  out.s2 = s2;
  out.v = rt * p2;
  return out;
}

double op_norm(const CMat& m) { return svd2(m).s1; }

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double norm2(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double pairwise_sum(std::span<const double> xs) { return pairwise_sum_impl(xs); }
Complex pairwise_sum(std::span<const Complex> xs) { return pairwise_sum_impl(xs); }

}  // namespace sl2c
