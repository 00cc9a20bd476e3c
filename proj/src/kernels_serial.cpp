#include <stdexcept>

#include "sl2c/kernels.hpp"

namespace sl2c::kernels::serial {

CVec weighted_tensor_sum(std::span<const WeightedElement> elements, int t,
                         std::span<const Complex> v) {
  if (t < 1 || t > 8) throw std::invalid_argument("serial::weighted_tensor_sum: t out of range");
  const std::size_t dim = std::size_t{1} << t;
  if (v.size() != dim * dim) {
    throw std::invalid_argument("serial::weighted_tensor_sum: vector length must be 4^t");
  }
  const CMat rho(dim, dim, CVec(v.begin(), v.end()));
  CMat sum(dim, dim);
  for (const auto& e : elements) {
    const CMat x = kron_power(e.matrix, t);
    sum += (x * rho * x.adjoint()) * e.weight;
  }
  const auto e = sum.entries();
  return CVec(e.begin(), e.end());
}

}  // namespace sl2c::kernels::serial
