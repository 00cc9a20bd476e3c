#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace sl2c {

/// Eigen-decomposition of a symmetric tridiagonal matrix, keeping only the
/// first component of each normalized eigenvector (all Golub-Welsch needs).
struct TridiagonalEigen {
  std::vector<double> values;           // ascending
  std::vector<double> first_components;
};

/// `diagonal` has n entries; `off_diagonal` has n-1 (entry k couples k and k+1).
TridiagonalEigen tridiagonal_eigen(std::span<const double> diagonal,
                                   std::span<const double> off_diagonal);

enum class WeightKind { Laguerre, ShiftedLaguerre, Legendre, Custom };

struct WeightDescriptor {
  WeightKind kind = WeightKind::Custom;
  double shift = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double interval_left = 0.0;
  double interval_right = std::numeric_limits<double>::infinity();
  int exactness_degree = 0;  // 2n - 1
  WeightDescriptor weight;

  std::size_t size() const { return nodes.size(); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Monic three-term recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.
/// beta[0] is the total mass of the weight.
struct RecurrenceCoeffs {
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// L_n(y) by (k+1)L_{k+1} = (2k+1-y)L_k - kL_{k-1}.
double laguerre_eval(int n, double y);

/// Gauss-Laguerre rule on [0, ∞) for e^{-y}, 1 <= n <= 64. Nodes are
/// eigenvalues of the Jacobi matrix polished by one Newton step on L_n;
/// weights are squared first eigenvector components.
QuadratureRule gauss_laguerre(int n);

/// The same rule moved to [1, ∞) for e^{-x}. Weights use the closed form
/// v = y / (e (n+1)² L_{n+1}(y)²) at y = x - 1.
QuadratureRule shifted_laguerre(int n);

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Golub-Welsch: the n-point Gauss rule of a recurrence (needs n coefficients).
QuadratureRule rule_from_recurrence(const RecurrenceCoeffs& rc, int n, double interval_left,
                                    double interval_right);

/// Recurrence coefficients p_0..p_{n-1} for a pointwise weight on
/// [interval_left, interval_right] by the discretized Stieltjes procedure.
/// Semi-infinite intervals are discretized with a 64-point shifted Gauss-Laguerre
/// rule (the weight is divided by e^{-(x - left)}), finite ones with a
/// 128-point Gauss-Legendre rule. Throws std::runtime_error when a beta loses
/// positivity.
RecurrenceCoeffs build_orthopoly(const std::function<double(double)>& weight, double interval_left,
                                 int n,
                                 double interval_right = std::numeric_limits<double>::infinity());

/// max_{k <= max_degree} |Σ w_i x_i^k - moment(k)| / |moment(k)|.
/// max_degree defaults to the rule's exactness degree.
double certify_exactness(const QuadratureRule& rule, const std::function<double(int)>& moment,
                         int max_degree = -1);

}  // namespace sl2c
