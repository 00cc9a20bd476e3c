#include "sl2c/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sl2c {

double expint_e1(double x) {
  if (!(x > 0.0) || x > 4.0) throw std::invalid_argument("expint_e1: x outside (0, 4]");
  // E₁(x) = -γ - ln x - Σ_{k>=1} (-x)^k / (k·k!)
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double contrib = term / k;
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) - sum;
}

double exp_moment(int k) {
  const double inv_e = std::exp(-1.0);
  if (k >= 0) {
    double g = inv_e;  // Γ(1, 1)
    for (int j = 1; j <= k; ++j) g = j * g + inv_e;
    return g;
  }
  // Γ(s+1,1) = sΓ(s,1) + e⁻¹  =>  Γ(s,1) = (Γ(s+1,1) - e⁻¹) / s
  double g = expint_e1(1.0);  // Γ(0, 1)
  for (int s = -1; s >= k + 1; --s) g = (g - inv_e) / s;
  return g;
}

}  // namespace sl2c
