#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sl2c/matrix.hpp"
#include "sl2c/su2_designs.hpp"

namespace sl2c {

/// standard: A_x = diag(x, 1/x) with weight x^{2t+5}e^{-x}.
/// slocc:    Ã_x = A_x / x = diag(1, x⁻²) with weight x^{2t+7}e^{-x}.
enum class Variant { Standard, Slocc };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// Exponent p of the suppressing weight x^p e^{-x}.
int weight_exponent(int t, Variant v);
/// Minimal quadrature order: 2t+5 (standard), 2t+7 (slocc).
int minimal_order(int t, Variant v);

/// Finite averaging set on the non-compact factor.
struct ADesign {
  int t = 0;
  Variant variant = Variant::Standard;
  std::vector<double> nodes;    // x_β > 1
  std::vector<double> weights;  // a_β > 0, Σ = 1
  double mu_a = 0.0;            // ∫_1^∞ h(x) x^p e^{-x} dx
};

struct SL2CDesign {
  int t = 0;
  Variant variant = Variant::Standard;
  GroupTag group = GroupTag::Icosahedral;
  int n_quadrature = 0;
  std::vector<WeightedElement> elements;  // ordered (α, β, γ) lexicographically
};

/// h(x) = 2((x² - x⁻²)/2)² / x, the Haar factor in the x coordinate.
double h_factor(double x);

/// ∫_1^∞ x^k h(x) x^p e^{-x} dx from exact incomplete-Gamma values; k may be negative.
double a_part_moment(int k, int p);

/// Nodes from shifted_laguerre(n) (n defaults to the minimal order),
/// a_β = x_β^p h(x_β) v_β / μ_A with μ_A from a_part_moment(0, p).
ADesign build_a_design(int t, Variant variant, std::optional<int> order = std::nullopt);

CMat a_element(double x, Variant variant);

/// All triples K_α · A_β · K_γ with weights k_α a_β k_γ.
SL2CDesign assemble_product(const SU2Design& su2, const ADesign& a);

/// build_su2_design(t) and build_a_design(t, variant, order), assembled.
SL2CDesign build_sl2c_design(int t, Variant variant, std::optional<int> order = std::nullopt);

/// Tr(L̃^{⊗t} ρ L̃^{†⊗t}) with L̃ = L / ‖L‖. ρ must be Hermitian with unit trace.
double success_probability(const CMat& l, const CMat& rho, int t);

}  // namespace sl2c
