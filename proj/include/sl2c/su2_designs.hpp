#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2c/matrix.hpp"

namespace sl2c {

struct WeightedElement {
  CMat matrix;
  double weight = 0.0;
};

enum class GroupTag { Tetrahedral, Octahedral, Icosahedral };

std::string_view to_string(GroupTag tag);
std::optional<GroupTag> parse_group_tag(std::string_view name);

/// Raised when a design fails its own certificate (closure size, frame potential).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SU2Design {
  std::vector<WeightedElement> elements;
  int t = 0;
  GroupTag group = GroupTag::Icosahedral;
};

/// U = diag(-ε³, -ε²), V = -(1/√5)[[ε³-ε, 1-ε⁴], [ε-1, ε²-ε⁴]], ε = e^{2πi/5}.
std::pair<CMat, CMat> icosahedral_generators();

/// iσx and (I + i(σx+σy+σz))/2.
std::vector<CMat> tetrahedral_generators();

/// The tetrahedral generators plus (i/√2)(σx+σz).
std::vector<CMat> octahedral_generators();

/// Multiplies m by the phase making its first entry with modulus > 1e-9
/// (row-major) real and positive.
CMat canonical_phase(const CMat& m);

/// True when a and b agree up to a global phase (canonical forms within 1e-9).
bool equal_mod_phase(const CMat& a, const CMat& b);

/// Breadth-first closure of the generated group modulo global phase, starting
/// from the identity. Returns canonical representatives in discovery order.
/// Throws CertificationError once more than `cap` elements appear.
std::vector<CMat> close_group_mod_phase(const std::vector<CMat>& generators,
                                        std::size_t cap = 10000);

/// Divides each matrix by the principal d-th root of its determinant.
std::vector<CMat> normalize_to_su(const std::vector<CMat>& elements, int d = 2);

/// Σ_{i,j} w_i w_j |tr(K_i† K_j)|^{2t}.
double frame_potential(const std::vector<WeightedElement>& elements, int t);

/// ∫_{SU(2)} |tr U|^{2t} dU, evaluated as (1/π)∫_0^{2π} (2cos θ)^{2t} sin²θ dθ with
/// an equispaced rule that is exact for this trigonometric polynomial.
double su2_trace_moment(int t);

/// The polyhedral group used for a given t (2, 3, 5).
GroupTag group_for_t(int t);
std::size_t expected_group_order(GroupTag tag);

/// Closure, SU(2) normalization, uniform weights and frame-potential
/// certification (within 1e-8 of su2_trace_moment(t)). t must be 2, 3 or 5.
SU2Design build_su2_design(int t);

}  // namespace sl2c
