#pragma once

namespace sl2c {

/// Exponential integral E₁(x) for x > 0 (power series; intended for x <= ~2).
double expint_e1(double x);

/// ∫₁^∞ x^k e^{-x} dx = Γ(k+1, 1) for any integer k.
///
/// k >= 0 uses the forward recurrence Γ(k+1,1) = kΓ(k,1) + e⁻¹, i.e.
/// k!·e⁻¹·Σ_{j<=k} 1/j!. Negative k starts from Γ(0,1) = E₁(1) and runs the
/// same recurrence downward.
double exp_moment(int k);

}  // namespace sl2c
