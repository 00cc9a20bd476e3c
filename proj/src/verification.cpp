#include "sl2c/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "sl2c/kernels.hpp"
#include "sl2c/quadrature.hpp"

namespace sl2c {

namespace {

constexpr double kWeightSumTol = 1e-10;
constexpr double kStructureTol = 1e-10;
constexpr double kFrameTol = 1e-8;
constexpr double kMomentTol = 1e-10;
constexpr double kDenseTol = 1e-10;
constexpr std::size_t kProbeBatch = 10;

std::size_t tensor_dim(int t) { return std::size_t{1} << (2 * t); }

void require_length(int t, std::size_t n, const char* who) {
  if (t < 1 || t > 12) throw std::invalid_argument(std::string(who) + ": t out of range");
  if (n != tensor_dim(t)) throw std::invalid_argument(std::string(who) + ": vector length must be 4^t");
}

double weight_sum_residual(const std::vector<WeightedElement>& elements) {
  std::vector<double> w;
  w.reserve(elements.size());
  for (const auto& e : elements) w.push_back(e.weight);
  return std::abs(pairwise_sum(w) - 1.0);
}

CMat dense_design_operator(const std::vector<WeightedElement>& elements, int t) {
  const std::size_t dim = tensor_dim(t);
  CMat out(dim, dim);
  for (const auto& e : elements) {
    out += kron(kron_power(e.matrix, t), kron_power(e.matrix.conjugate(), t)) * e.weight;
  }
  return out;
}

template <class Oracle>
double dense_residual(const std::vector<WeightedElement>& elements, int t, Oracle&& oracle,
                      double scale) {
  const std::size_t dim = tensor_dim(t);
  const CMat d = dense_design_operator(elements, t);
  double worst = 0.0;
  CVec e(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::fill(e.begin(), e.end(), Complex{});
    e[c] = 1.0;
    const CVec col = oracle(std::span<const Complex>(e));
    for (std::size_t r = 0; r < dim; ++r) worst = std::max(worst, std::abs(d(r, c) - col[r]));
  }
  return worst / scale;
}

// Distinct A-part nodes recovered from singular values, with their summed weights.
std::vector<std::pair<double, double>> recover_a_part(const SL2CDesign& design) {
  std::vector<std::pair<double, double>> xs;
  xs.reserve(design.elements.size());
  for (const auto& e : design.elements) {
    const Svd2 s = svd2(e.matrix);
    const double x = design.variant == Variant::Standard ? s.s1 : std::sqrt(s.s1 / s.s2);
    xs.emplace_back(x, e.weight);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<double, double>> groups;
  std::vector<double> pending;
  double anchor = 0.0;
  auto flush = [&] {
    if (!pending.empty()) groups.emplace_back(anchor, pairwise_sum(pending));
    pending.clear();
  };
  for (const auto& [x, w] : xs) {
    if (pending.empty() || std::abs(x - anchor) > 1e-7 * anchor) {
      flush();
      anchor = x;
    }
    pending.push_back(w);
  }
  flush();
  return groups;
}

double a_moment_residual(const SL2CDesign& design) {
  const auto groups = recover_a_part(design);
  double worst = 0.0;
  for (int j = -2 * design.t; j <= 2 * design.t; j += 2) {
    std::vector<double> terms;
    for (const auto& [x, a] : groups) terms.push_back(a * std::pow(x, j));
    const double exact = a_moment(j, design.t, design.variant);
    worst = std::max(worst, std::abs(pairwise_sum(terms) - exact) / std::abs(exact));
  }
  return worst;
}

std::vector<WeightedElement> compact_reference(GroupTag tag) {
  switch (tag) {
    case GroupTag::Tetrahedral: return build_su2_design(2).elements;
    case GroupTag::Octahedral: return build_su2_design(3).elements;
    case GroupTag::Icosahedral: return build_su2_design(5).elements;
  }
  return {};
}

VerificationReport verify_compact(const SU2Design& design, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.t = design.t;
  rep.variant = "compact";
  rep.probe_count = opt.probes;
  rep.seed = opt.seed;

  rep.checks.push_back(make_check("weight_sum", weight_sum_residual(design.elements), kWeightSumTol));

  double unitarity = 0.0;
  for (const auto& e : design.elements) {
    unitarity = std::max(unitarity, max_abs_diff(e.matrix.adjoint() * e.matrix, CMat::identity(2)));
  }
  rep.checks.push_back(make_check("unitarity", unitarity, kStructureTol));

  rep.checks.push_back(make_check(
      "frame_potential",
      std::abs(frame_potential(design.elements, design.t) - su2_trace_moment(design.t)), kFrameTol));

  const int t = design.t;
  const HaarGrid grid = opt.grid.value_or(default_haar_grid(t));
  const auto oracle = [t, grid](std::span<const Complex> v) { return su2_haar_oracle_apply(t, v, grid); };
  const auto probes = make_probes(tensor_dim(t), opt.probes, opt.seed);
  rep.checks.push_back(
      make_check("design_equation", probe_residual(design.elements, t, probes, oracle, 1.0), opt.tol));
  if (t <= 2) {
    rep.checks.push_back(
        make_check("dense_operator", dense_residual(design.elements, t, oracle, 1.0), kDenseTol));
  }
  return rep;
}

VerificationReport verify_full(const SL2CDesign& design, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.t = design.t;
  rep.variant = std::string(to_string(design.variant));
  rep.probe_count = opt.probes;
  rep.seed = opt.seed;

  rep.checks.push_back(make_check("weight_sum", weight_sum_residual(design.elements), kWeightSumTol));

  double structure = 0.0;
  for (const auto& e : design.elements) {
    const double r = design.variant == Variant::Standard ? std::abs(det2(e.matrix) - 1.0)
                                                         : std::abs(op_norm(e.matrix) - 1.0);
    structure = std::max(structure, r);
  }
  rep.checks.push_back(make_check(
      design.variant == Variant::Standard ? "determinant" : "operator_norm", structure, kStructureTol));

  rep.checks.push_back(make_check(
      "frame_potential",
      std::abs(frame_potential(compact_reference(design.group), design.t) - su2_trace_moment(design.t)),
      kFrameTol));

  rep.checks.push_back(make_check("a_moments", a_moment_residual(design), kMomentTol));

  const int t = design.t;
  const Variant variant = design.variant;
  const double scale = opt.scaled ? oracle_scale(t, variant) : 1.0;
  rep.residual_scale = scale;
  const auto oracle = [t, variant](std::span<const Complex> v) {
    return factorized_oracle_apply(t, variant, v);
  };
  const auto probes = make_probes(tensor_dim(t), opt.probes, opt.seed);
  rep.checks.push_back(
      make_check("design_equation", probe_residual(design.elements, t, probes, oracle, scale), opt.tol));
  if (t <= 2) {
    rep.checks.push_back(
        make_check("dense_operator", dense_residual(design.elements, t, oracle, scale), kDenseTol));
  }
  return rep;
}

}  // namespace

CVec vectorize(const CMat& m) {
  const auto e = m.entries();
  return CVec(e.begin(), e.end());
}

CMat devectorize(std::span<const Complex> v) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) throw std::invalid_argument("devectorize: length is not a perfect square");
  return CMat(n, n, CVec(v.begin(), v.end()));
}

CVec design_operator_apply(std::span<const WeightedElement> elements, int t,
                           std::span<const Complex> v) {
  return kernels::weighted_tensor_sum(elements, t, v);
}

HaarGrid minimal_haar_grid(int t) { return {2 * t + 2, 2 * t + 2, 2 * t + 2}; }

HaarGrid default_haar_grid(int t) { return {2 * t + 2, 2 * t + 2, 2 * t + 2}; }

void validate_haar_grid(int t, const HaarGrid& grid) {
  if (t < 1) throw std::invalid_argument("haar grid: t must be >= 1");
  const HaarGrid need = minimal_haar_grid(t);
  if (grid.n_phi < need.n_phi) {
    throw std::invalid_argument("haar grid: n_phi must be >= " + std::to_string(need.n_phi));
  }
  if (grid.n_theta < need.n_theta) {
    throw std::invalid_argument("haar grid: n_theta must be >= " + std::to_string(need.n_theta));
  }
  if (grid.n_psi < need.n_psi) {
    throw std::invalid_argument("haar grid: n_psi must be >= " + std::to_string(need.n_psi));
  }
}

std::vector<WeightedElement> su2_haar_rule(int t, const HaarGrid& grid) {
  validate_haar_grid(t, grid);
  const QuadratureRule gl = gauss_legendre(grid.n_theta);
  const double base = 1.0 / (static_cast<double>(grid.n_phi) * grid.n_psi);
  std::vector<WeightedElement> out;
  out.reserve(static_cast<std::size_t>(grid.n_phi) * grid.n_theta * grid.n_psi);
  for (int a = 0; a < grid.n_phi; ++a) {
    const double phi = 2.0 * std::numbers::pi * a / grid.n_phi;
    const Complex ep = std::polar(1.0, phi / 2);
    for (int b = 0; b < grid.n_theta; ++b) {
      const double u = gl.nodes[b];
      const double c = std::sqrt((1.0 + u) / 2), s = std::sqrt((1.0 - u) / 2);
      for (int g = 0; g < grid.n_psi; ++g) {
        const double psi = 4.0 * std::numbers::pi * g / grid.n_psi;
        const Complex eq = std::polar(1.0, psi / 2);
        CMat k = CMat::from2x2(ep * c * eq, -ep * s * std::conj(eq), std::conj(ep) * s * eq,
                               std::conj(ep) * c * std::conj(eq));
        out.push_back({std::move(k), base * gl.weights[b] / 2});
      }
    }
  }
  return out;
}

CVec su2_haar_oracle_apply(int t, std::span<const Complex> v, std::optional<HaarGrid> grid) {
  require_length(t, v.size(), "su2_haar_oracle_apply");
  const auto rule = su2_haar_rule(t, grid.value_or(default_haar_grid(t)));
  return kernels::weighted_tensor_sum(rule, t, v);
}

double a_moment(int j, int t, Variant variant) {
  const int p = weight_exponent(t, variant);
  return a_part_moment(j, p) / a_part_moment(0, p);
}

int a_exponent(std::size_t index, int t, Variant variant) {
  const int legs = 2 * t;
  int ones = 0;
  for (int l = 0; l < legs; ++l) ones += static_cast<int>((index >> l) & 1U);
  return variant == Variant::Standard ? legs - 2 * ones : -2 * ones;
}

CVec a_haar_oracle_apply(int t, Variant variant, std::span<const Complex> v) {
  require_length(t, v.size(), "a_haar_oracle_apply");
  std::vector<double> moment(4 * t + 1, std::nan(""));
  CVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int j = a_exponent(k, t, variant);
    // standard exponents lie in [-2t, 2t]; slocc in [-4t, 0]
    const int slot = variant == Variant::Standard ? j + 2 * t : j + 4 * t;
    if (std::isnan(moment[slot])) moment[slot] = a_moment(j, t, variant);
    out[k] = moment[slot] * v[k];
  }
  return out;
}

CVec factorized_oracle_apply(int t, Variant variant, std::span<const Complex> v) {
  require_length(t, v.size(), "factorized_oracle_apply");
  const auto rule = su2_haar_rule(t, default_haar_grid(t));
  const CVec s1 = kernels::weighted_tensor_sum(rule, t, v);
  const CVec a = a_haar_oracle_apply(t, variant, s1);
  return kernels::weighted_tensor_sum(rule, t, a);
}

double oracle_scale(int t, Variant variant) {
  double scale = 1.0;
  const int lo = variant == Variant::Standard ? -2 * t : -4 * t;
  const int hi = variant == Variant::Standard ? 2 * t : 0;
  for (int j = lo; j <= hi; j += 2) scale = std::max(scale, std::abs(a_moment(j, t, variant)));
  return scale;
}

std::vector<ProbePair> make_probes(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] {
    CVec x(dim);
    for (auto& z : x) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = Complex(re, im);
    }
    const double n = norm2(x);
    for (auto& z : x) z /= n;
    return x;
  };
  std::vector<ProbePair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CVec v = draw();
    CVec u = draw();
    out.push_back({std::move(u), std::move(v)});
  }
  return out;
}

CheckResult make_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual <= tolerance};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["t"] = t;
  doc["variant"] = variant;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["residual"] = c.residual;
    item["tolerance"] = c.tolerance;
    item["passed"] = c.passed;
    doc["checks"].push_back(std::move(item));
  }
  doc["probe_count"] = probe_count;
  doc["seed"] = seed;
  doc["residual_scale"] = residual_scale;
  doc["passed"] = passed();
  return doc.dump(2) + "\n";
}

double probe_residual(std::span<const WeightedElement> elements, int t,
                      const std::vector<ProbePair>& probes,
                      const std::function<CVec(std::span<const Complex>)>& oracle, double scale) {
  const std::size_t dim = tensor_dim(t);
  double worst = 0.0;
  for (std::size_t start = 0; start < probes.size(); start += kProbeBatch) {
    const std::size_t batch = std::min(kProbeBatch, probes.size() - start);
    CVec packed(dim * batch);
    for (std::size_t p = 0; p < batch; ++p)
      for (std::size_t k = 0; k < dim; ++k) packed[k * batch + p] = probes[start + p].v[k];
    const CVec dv = kernels::weighted_tensor_sum_batch(elements, t, packed, batch);
    for (std::size_t p = 0; p < batch; ++p) {
      const ProbePair& probe = probes[start + p];
      CVec col(dim);
      for (std::size_t k = 0; k < dim; ++k) col[k] = dv[k * batch + p];
      const CVec ov = oracle(probe.v);
      worst = std::max(worst, std::abs(inner(probe.u, col) - inner(probe.u, ov)));
    }
  }
  return worst / scale;
}

VerificationReport verify_design(const DesignFile& design, const VerifyOptions& options) {
  if (const auto* su2 = std::get_if<SU2Design>(&design)) return verify_compact(*su2, options);
  return verify_full(std::get<SL2CDesign>(design), options);
}

CMat average_state(std::span<const WeightedElement> elements, int t, const CMat& rho) {
  const std::size_t dim = std::size_t{1} << t;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("average_state: rho must be 2^t x 2^t");
  }
  return devectorize(kernels::weighted_tensor_sum(elements, t, vectorize(rho)));
}

}  // namespace sl2c
