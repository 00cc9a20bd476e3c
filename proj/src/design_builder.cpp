#include "sl2c/design_builder.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sl2c/cartan.hpp"
#include "sl2c/quadrature.hpp"
#include "sl2c/special.hpp"

namespace sl2c {

std::string_view to_string(Variant v) {
  return v == Variant::Standard ? "standard" : "slocc";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "standard") return Variant::Standard;
  if (name == "slocc") return Variant::Slocc;
  return std::nullopt;
}

int weight_exponent(int t, Variant v) { return v == Variant::Standard ? 2 * t + 5 : 2 * t + 7; }

int minimal_order(int t, Variant v) { return weight_exponent(t, v); }

double h_factor(double x) { return measure_factor_x(x); }

double a_part_moment(int k, int p) {
  // h(x) x^p = (x^{p+3} - 2x^{p-1} + x^{p-5}) / 2
  return 0.5 * (exp_moment(k + p + 3) - 2.0 * exp_moment(k + p - 1) + exp_moment(k + p - 5));
}

ADesign build_a_design(int t, Variant variant, std::optional<int> order) {
  if (t < 1) throw std::invalid_argument("build_a_design: t must be >= 1");
  const int n = order.value_or(minimal_order(t, variant));
  if (n < minimal_order(t, variant)) {
    throw std::invalid_argument("build_a_design: quadrature order below " +
                                std::to_string(minimal_order(t, variant)));
  }
  const int p = weight_exponent(t, variant);
  const QuadratureRule rule = shifted_laguerre(n);

  ADesign a;
  a.t = t;
  a.variant = variant;
  a.mu_a = a_part_moment(0, p);
  a.nodes = rule.nodes;
  a.weights.resize(rule.size());
  for (std::size_t b = 0; b < rule.size(); ++b) {
    const double x = rule.nodes[b];
    a.weights[b] = std::pow(x, p) * h_factor(x) * rule.weights[b] / a.mu_a;
  }
  return a;
}

CMat a_element(double x, Variant variant) {
  if (!(x >= 1.0)) throw std::invalid_argument("a_element: x must be >= 1");
  if (variant == Variant::Standard) return a_matrix(x);
  return CMat::from2x2(1.0, 0.0, 0.0, 1.0 / (x * x));
}

SL2CDesign assemble_product(const SU2Design& su2, const ADesign& a) {
  if (su2.t != a.t) throw std::invalid_argument("assemble_product: t mismatch between factors");
  const std::size_t nk = su2.elements.size();
  const std::size_t na = a.nodes.size();

  SL2CDesign out;
  out.t = a.t;
  out.variant = a.variant;
  out.group = su2.group;
  out.n_quadrature = static_cast<int>(na);
  out.elements.resize(nk * na * nk);

  std::vector<CMat> a_mats;
  for (double x : a.nodes) a_mats.push_back(a_element(x, a.variant));

  const auto total = static_cast<std::ptrdiff_t>(nk * na);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ab = 0; ab < total; ++ab) {
    const std::size_t alpha = static_cast<std::size_t>(ab) / na;
    const std::size_t beta = static_cast<std::size_t>(ab) % na;
    const WeightedElement& left = su2.elements[alpha];
    const CMat ka = left.matrix * a_mats[beta];
    const double wka = left.weight * a.weights[beta];
    for (std::size_t gamma = 0; gamma < nk; ++gamma) {
      const WeightedElement& right = su2.elements[gamma];
      out.elements[static_cast<std::size_t>(ab) * nk + gamma] = {ka * right.matrix,
                                                                  wka * right.weight};
    }
  }
  return out;
}

SL2CDesign build_sl2c_design(int t, Variant variant, std::optional<int> order) {
  return assemble_product(build_su2_design(t), build_a_design(t, variant, order));
}

double success_probability(const CMat& l, const CMat& rho, int t) {
  if (t < 1) throw std::invalid_argument("success_probability: t must be >= 1");
  const std::size_t dim = std::size_t{1} << t;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("success_probability: rho must be 2^t x 2^t");
  }
  if (max_abs_diff(rho, rho.adjoint()) > 1e-10 || std::abs(rho.trace() - 1.0) > 1e-10) {
    throw std::invalid_argument("success_probability: rho must be Hermitian with unit trace");
  }
  const CMat l_normalized = l * (1.0 / op_norm(l));
  // Tr(X ρ X†) = Σ_ij (Xρ)_ij conj(X_ij)
  const CMat x = kron_power(l_normalized, t);
  const CMat y = x * rho;
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) acc += y(i, j) * std::conj(x(i, j));
  return acc.real();
}

}  // namespace sl2c
