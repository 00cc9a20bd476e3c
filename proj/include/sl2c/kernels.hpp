#pragma once

#include <span>

#include "sl2c/matrix.hpp"
#include "sl2c/su2_designs.hpp"

namespace sl2c::kernels {

/// Σ_i w_i (L_i^{⊗t} ⊗ conj(L_i)^{⊗t}) v for 2×2 matrices L_i and |v| = 4^t.
///
/// Tensor legs are ordered most-significant-bit first: the first t legs carry
/// L_i, the last t legs carry conj(L_i). With row-wise vectorization Φ this is
/// Φ(Σ_i w_i L_i^{⊗t} ρ L_i^{†⊗t}) for v = Φ(ρ).
///
/// Elements are split into a fixed partition (depending only on the element
/// count); partials are reduced pairwise in block order, so the result is
/// bitwise identical for every OpenMP thread count.
CVec weighted_tensor_sum(std::span<const WeightedElement> elements, int t,
                         std::span<const Complex> v);

/// Batched form: `vs` holds `batch` vectors interleaved, entry (k, p) at k*batch + p.
CVec weighted_tensor_sum_batch(std::span<const WeightedElement> elements, int t,
                               std::span<const Complex> vs, std::size_t batch);

inline constexpr std::size_t kMinBlock = 256;
inline constexpr std::size_t kMaxBlocks = 64;

std::size_t block_size(std::size_t n_elements);

/// In place: applies the 2×2 matrix m (row-major) to leg `leg` of a `legs`-leg batched vector.
void apply_leg(const Complex* m, int leg, int legs, std::span<Complex> v, std::size_t batch);

namespace serial {

/// Reference: Φ(X ρ X†) with X = L^{⊗t} built densely, summed in element order.
CVec weighted_tensor_sum(std::span<const WeightedElement> elements, int t,
                         std::span<const Complex> v);

}  // namespace serial

}  // namespace sl2c::kernels
