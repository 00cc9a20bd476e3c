#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sl2c/design_builder.hpp"
#include "sl2c/design_io.hpp"
#include "sl2c/matrix.hpp"

namespace sl2c {

/// Row-wise vectorization: Φ(ABC) = (A ⊗ Cᵀ) Φ(B).
CVec vectorize(const CMat& m);
/// Inverse of vectorize; the length must be a perfect square.
CMat devectorize(std::span<const Complex> v);

/// Σ_i w_i (L_i^{⊗t} ⊗ L_i^{*⊗t}) v, first t legs unconjugated.
CVec design_operator_apply(std::span<const WeightedElement> elements, int t,
                           std::span<const Complex> v);

/// Product grid for the compact Haar integral in Euler angles
/// K = diag(e^{iφ/2}, e^{-iφ/2}) R_y(θ) diag(e^{iψ/2}, e^{-iψ/2}):
/// trapezoid in φ ∈ [0, 2π) and ψ ∈ [0, 4π), Gauss-Legendre in cos θ.
struct HaarGrid {
  int n_phi = 0;
  int n_theta = 0;
  int n_psi = 0;
};

/// Smallest accepted grid: 2t+2 points per axis.
HaarGrid minimal_haar_grid(int t);
HaarGrid default_haar_grid(int t);
/// Throws std::invalid_argument if any axis is below its exactness threshold.
void validate_haar_grid(int t, const HaarGrid& grid);

std::vector<WeightedElement> su2_haar_rule(int t, const HaarGrid& grid);

/// ∫_SU(2) K^{⊗t} ⊗ K^{*⊗t} v dK.
CVec su2_haar_oracle_apply(int t, std::span<const Complex> v,
                           std::optional<HaarGrid> grid = std::nullopt);

/// Normalized moment E[x^j] of the A-part weight, exact.
double a_moment(int j, int t, Variant variant);

/// Exponent of x carried by basis index `index` under A^{⊗t} ⊗ A^{*⊗t}.
int a_exponent(std::size_t index, int t, Variant variant);

/// Diagonal operator ∫ A_x^{⊗t} ⊗ A_x^{*⊗t} dμ_A(x).
CVec a_haar_oracle_apply(int t, Variant variant, std::span<const Complex> v);

/// S ∘ A ∘ S with S the compact Haar projector.
CVec factorized_oracle_apply(int t, Variant variant, std::span<const Complex> v);

/// max(1, max_j |E[x^j]|) over the exponents present at (t, variant).
double oracle_scale(int t, Variant variant);

struct ProbePair {
  CVec u;
  CVec v;
};

/// Unit complex Gaussian vectors of length `dim` from mt19937_64(seed); v drawn before u.
std::vector<ProbePair> make_probes(std::size_t dim, std::size_t count, std::uint64_t seed);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  int t = 0;
  std::string variant;
  std::vector<CheckResult> checks;
  std::size_t probe_count = 0;
  std::uint64_t seed = 0;
  double residual_scale = 1.0;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::size_t probes = 50;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  /// Divide probe and dense residuals by oracle_scale(t, variant).
  bool scaled = false;
  std::optional<HaarGrid> grid;
};

CheckResult make_check(std::string name, double residual, double tolerance);

/// Max over probes of |⟨u, D v⟩ − ⟨u, O v⟩| / scale.
double probe_residual(std::span<const WeightedElement> elements, int t,
                      const std::vector<ProbePair>& probes,
                      const std::function<CVec(std::span<const Complex>)>& oracle, double scale);

VerificationReport verify_design(const DesignFile& design, const VerifyOptions& options = {});

/// Σ_i w_i L_i^{⊗t} ρ L_i^{†⊗t}.
CMat average_state(std::span<const WeightedElement> elements, int t, const CMat& rho);

}  // namespace sl2c
