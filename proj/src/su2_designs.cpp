#include "sl2c/su2_designs.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sl2c {

namespace {

constexpr double kPhaseThreshold = 1e-9;
constexpr Complex kI{0.0, 1.0};

const CMat& sigma_x() {
  static const CMat m = CMat::from2x2(0.0, 1.0, 1.0, 0.0);
  return m;
}
const CMat& sigma_y() {
  static const CMat m = CMat::from2x2(0.0, -kI, kI, 0.0);
  return m;
}
const CMat& sigma_z() {
  static const CMat m = CMat::from2x2(1.0, 0.0, 0.0, -1.0);
  return m;
}

}  // namespace

std::string_view to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::Tetrahedral: return "tetrahedral";
    case GroupTag::Octahedral: return "octahedral";
    case GroupTag::Icosahedral: return "icosahedral";
  }
  return "unknown";
}

std::optional<GroupTag> parse_group_tag(std::string_view name) {
  if (name == "tetrahedral") return GroupTag::Tetrahedral;
  if (name == "octahedral") return GroupTag::Octahedral;
  if (name == "icosahedral") return GroupTag::Icosahedral;
  return std::nullopt;
}

std::pair<CMat, CMat> icosahedral_generators() {
  const Complex eps = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
  const Complex e2 = eps * eps, e3 = e2 * eps, e4 = e3 * eps;
  CMat u = CMat::from2x2(-e3, 0.0, 0.0, -e2);
  CMat v = CMat::from2x2(e3 - eps, 1.0 - e4, eps - 1.0, e2 - e4) * (-1.0 / std::sqrt(5.0));
  return {std::move(u), std::move(v)};
}

std::vector<CMat> tetrahedral_generators() {
  const CMat id = CMat::identity(2);
  return {sigma_x() * kI, (id + (sigma_x() + sigma_y() + sigma_z()) * kI) * 0.5};
}

std::vector<CMat> octahedral_generators() {
  std::vector<CMat> gens = tetrahedral_generators();
  gens.push_back((sigma_x() + sigma_z()) * (kI / std::sqrt(2.0)));
  return gens;
}

CMat canonical_phase(const CMat& m) {
  for (const Complex& z : m.entries()) {
    const double a = std::abs(z);
    if (a > kPhaseThreshold) return m * (std::conj(z) / a);
  }
  return m;
}

bool equal_mod_phase(const CMat& a, const CMat& b) {
  return max_abs_diff(canonical_phase(a), canonical_phase(b)) <= kPhaseThreshold;
}

std::vector<CMat> close_group_mod_phase(const std::vector<CMat>& generators, std::size_t cap) {
  for (const CMat& g : generators) {
    if (!g.all_finite() || g.rows() != g.cols()) {
      throw CertificationError("close_group_mod_phase: generator is not a finite square matrix");
    }
  }
  if (generators.empty()) return {};
  std::vector<CMat> found{canonical_phase(CMat::identity(generators.front().rows()))};
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const CMat& g : generators) {
      CMat candidate = canonical_phase(found[next] * g);
      bool seen = false;
      for (const CMat& f : found) {
        if (max_abs_diff(f, candidate) <= kPhaseThreshold) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      found.push_back(std::move(candidate));
      if (found.size() > cap) {
        throw CertificationError("close_group_mod_phase: closure exceeded " +
                                 std::to_string(cap) + " elements");
      }
    }
  }
  return found;
}

std::vector<CMat> normalize_to_su(const std::vector<CMat>& elements, int d) {
  if (d != 2) throw std::invalid_argument("normalize_to_su: only d = 2 is supported");
  std::vector<CMat> out;
  out.reserve(elements.size());
  for (const CMat& k : elements) out.push_back(k * (1.0 / std::sqrt(det2(k))));
  return out;
}

double frame_potential(const std::vector<WeightedElement>& elements, int t) {
  if (t < 1) throw std::invalid_argument("frame_potential: t must be >= 1");
  std::vector<double> terms;
  terms.reserve(elements.size() * elements.size());
  for (const auto& a : elements) {
    const CMat a_dag = a.matrix.adjoint();
    for (const auto& b : elements) {
      const double tr = std::abs((a_dag * b.matrix).trace());
      terms.push_back(a.weight * b.weight * std::pow(tr, 2 * t));
    }
  }
  return pairwise_sum(terms);
}

double su2_trace_moment(int t) {
  if (t < 0) throw std::invalid_argument("su2_trace_moment: t must be >= 0");
  // Degree 2t+2 trigonometric polynomial: 2t+3 equispaced points suffice; take a margin.
  const int points = 4 * t + 8;
  std::vector<double> terms(points);
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / points;
    const double s = std::sin(theta);
    terms[k] = std::pow(2.0 * std::cos(theta), 2 * t) * s * s;
  }
  return 2.0 * pairwise_sum(terms) / points;
}

GroupTag group_for_t(int t) {
  switch (t) {
    case 2: return GroupTag::Tetrahedral;
    case 3: return GroupTag::Octahedral;
    case 5: return GroupTag::Icosahedral;
    default: throw std::invalid_argument("no polyhedral SU(2) design bundled for t = " + std::to_string(t));
  }
}

std::size_t expected_group_order(GroupTag tag) {
  switch (tag) {
    case GroupTag::Tetrahedral: return 12;
    case GroupTag::Octahedral: return 24;
    case GroupTag::Icosahedral: return 60;
  }
  return 0;
}

SU2Design build_su2_design(int t) {
  const GroupTag tag = group_for_t(t);
  std::vector<CMat> generators;
  switch (tag) {
    case GroupTag::Tetrahedral: generators = tetrahedral_generators(); break;
    case GroupTag::Octahedral: generators = octahedral_generators(); break;
    case GroupTag::Icosahedral: {
      auto [u, v] = icosahedral_generators();
      generators = {std::move(u), std::move(v)};
      break;
    }
  }

  const std::vector<CMat> group = normalize_to_su(close_group_mod_phase(generators));
  if (group.size() != expected_group_order(tag)) {
    std::ostringstream msg;
    msg << "build_su2_design: closure of " << to_string(tag) << " generators has " << group.size()
        << " elements, expected " << expected_group_order(tag);
    throw CertificationError(msg.str());
  }

  SU2Design design;
  design.t = t;
  design.group = tag;
  const double w = 1.0 / static_cast<double>(group.size());
  for (const CMat& k : group) design.elements.push_back({k, w});

  const double fp = frame_potential(design.elements, t);
  const double target = su2_trace_moment(t);
  if (std::abs(fp - target) > 1e-8) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "build_su2_design: frame potential " << fp << " differs from Haar value " << target
        << " for t = " << t;
    throw CertificationError(msg.str());
  }
  return design;
}

}  // namespace sl2c
