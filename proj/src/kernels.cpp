#include "sl2c/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sl2c::kernels {

namespace {

void check_shape(std::span<const WeightedElement> elements, int t, std::size_t len,
                 const char* who) {
  if (t < 1 || t > 12) throw std::invalid_argument(std::string(who) + ": t out of range");
  if (len != (std::size_t{1} << (2 * t))) {
    throw std::invalid_argument(std::string(who) + ": vector length must be 4^t");
  }
  for (const auto& e : elements) {
    if (e.matrix.rows() != 2 || e.matrix.cols() != 2) {
      throw std::invalid_argument(std::string(who) + ": elements must be 2x2");
    }
  }
}

// acc += w * x, both interleaved re/im
void axpy(double w, const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += w * x[i];
}

}  // namespace

std::size_t block_size(std::size_t n_elements) {
  const std::size_t even = (n_elements + kMaxBlocks - 1) / kMaxBlocks;
  return even > kMinBlock ? even : kMinBlock;
}

void apply_leg(const Complex* m, int leg, int legs, std::span<Complex> v, std::size_t batch) {
  const double m0r = m[0].real(), m0i = m[0].imag();
  const double m1r = m[1].real(), m1i = m[1].imag();
  const double m2r = m[2].real(), m2i = m[2].imag();
  const double m3r = m[3].real(), m3i = m[3].imag();
  const std::size_t stride = (std::size_t{1} << (legs - 1 - leg)) * batch;
  const std::size_t len = v.size();
  double* d = reinterpret_cast<double*>(v.data());
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    double* x0 = d + 2 * base;
    double* x1 = x0 + 2 * stride;
    for (std::size_t j = 0; j < stride; ++j) {
      const double ar = x0[2 * j], ai = x0[2 * j + 1];
      const double br = x1[2 * j], bi = x1[2 * j + 1];
      x0[2 * j] = m0r * ar - m0i * ai + m1r * br - m1i * bi;
      x0[2 * j + 1] = m0r * ai + m0i * ar + m1r * bi + m1i * br;
      x1[2 * j] = m2r * ar - m2i * ai + m3r * br - m3i * bi;
      x1[2 * j + 1] = m2r * ai + m2i * ar + m3r * bi + m3i * br;
    }
  }
}

CVec weighted_tensor_sum_batch(std::span<const WeightedElement> elements, int t,
                               std::span<const Complex> vs, std::size_t batch) {
  if (batch == 0 || vs.size() % batch != 0) {
    throw std::invalid_argument("weighted_tensor_sum: batch does not divide input length");
  }
  check_shape(elements, t, vs.size() / batch, "weighted_tensor_sum");
  const std::size_t len = vs.size();
  const int legs = 2 * t;
  const std::size_t n = elements.size();
  const std::size_t bs = block_size(n);
  const std::size_t n_blocks = (n + bs - 1) / bs;
  if (n_blocks == 0) return CVec(len, Complex{});

  std::vector<CVec> partial(n_blocks);

#pragma omp parallel
  {
    CVec scratch(len);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(n_blocks); ++b) {
      CVec acc(len, Complex{});
      const std::size_t lo = static_cast<std::size_t>(b) * bs;
      const std::size_t hi = lo + bs < n ? lo + bs : n;
      for (std::size_t i = lo; i < hi; ++i) {
        const CMat& l = elements[i].matrix;
        const Complex direct[4] = {l(0, 0), l(0, 1), l(1, 0), l(1, 1)};
        const Complex conj[4] = {std::conj(direct[0]), std::conj(direct[1]),
                                 std::conj(direct[2]), std::conj(direct[3])};
        std::copy(vs.begin(), vs.end(), scratch.begin());
        for (int leg = 0; leg < t; ++leg) apply_leg(direct, leg, legs, scratch, batch);
        for (int leg = t; leg < legs; ++leg) apply_leg(conj, leg, legs, scratch, batch);
        axpy(elements[i].weight, reinterpret_cast<const double*>(scratch.data()),
             reinterpret_cast<double*>(acc.data()), 2 * len);
      }
      partial[static_cast<std::size_t>(b)] = std::move(acc);
    }
  }

  // fixed-shape pairwise tree over blocks
  for (std::size_t step = 1; step < n_blocks; step *= 2) {
    for (std::size_t i = 0; i + step < n_blocks; i += 2 * step) {
      axpy(1.0, reinterpret_cast<const double*>(partial[i + step].data()),
           reinterpret_cast<double*>(partial[i].data()), 2 * len);
    }
  }
  return std::move(partial[0]);
}

CVec weighted_tensor_sum(std::span<const WeightedElement> elements, int t,
                         std::span<const Complex> v) {
  return weighted_tensor_sum_batch(elements, t, v, 1);
}

}  // namespace sl2c::kernels
