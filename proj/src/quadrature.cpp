#include "sl2c/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sl2c/matrix.hpp"

namespace sl2c {

namespace {

void require_order(int n, int max_n, const char* what) {
  if (n < 1 || n > max_n) {
    throw std::invalid_argument(std::string(what) + ": order must be in [1, " +
                                std::to_string(max_n) + "]");
  }
}

struct LegendrePair {
  double p;
  double dp;
};

// P_n(x) and P_n'(x).
LegendrePair legendre_eval(int n, double x) {
  double p_prev = 1.0, p = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = p_next;
  }
  return {p, n * (x * p - p_prev) / (x * x - 1.0)};
}

// Gauss-Laguerre weight times e^{y}: the rule then integrates ∫_0^∞ f(y) dy.
double laguerre_weight_times_exp(int n, double y) {
  const double l = laguerre_eval(n + 1, y);
  return y * std::exp(y) / ((n + 1.0) * (n + 1.0) * l * l);
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
  return pairwise_sum(terms);
}

double laguerre_eval(int n, double y) {
  if (n < 0) throw std::invalid_argument("laguerre_eval: n must be >= 0");
  if (n == 0) return 1.0;
  double l_prev = 1.0, l = 1.0 - y;
  for (int k = 1; k < n; ++k) {
    const double l_next = ((2.0 * k + 1.0 - y) * l - k * l_prev) / (k + 1.0);
    l_prev = l;
    l = l_next;
  }
  return l;
}

QuadratureRule gauss_laguerre(int n) {
  require_order(n, 64, "gauss_laguerre");
  std::vector<double> diag(n), off(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) off[k - 1] = k;
  const TridiagonalEigen eig = tridiagonal_eigen(diag, off);

  QuadratureRule rule;
  rule.nodes = eig.values;
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double& y = rule.nodes[k];
    const double ln = laguerre_eval(n, y);
    const double dln = n * (ln - laguerre_eval(n - 1, y)) / y;
    y -= ln / dln;
    rule.weights[k] = eig.first_components[k] * eig.first_components[k];
  }
  rule.interval_left = 0.0;
  rule.exactness_degree = 2 * n - 1;
  rule.weight = {WeightKind::Laguerre, 0.0};
  return rule;
}

QuadratureRule shifted_laguerre(int n) {
  QuadratureRule rule = gauss_laguerre(n);
  const double e = std::exp(1.0);
  for (int k = 0; k < n; ++k) {
    const double y = rule.nodes[k];
    const double l_next = laguerre_eval(n + 1, y);
    rule.weights[k] = y / (e * (n + 1.0) * (n + 1.0) * l_next * l_next);
    rule.nodes[k] = 1.0 + y;
  }
  rule.interval_left = 1.0;
  rule.weight = {WeightKind::ShiftedLaguerre, 1.0};
  return rule;
}

QuadratureRule gauss_legendre(int n) {
  require_order(n, 256, "gauss_legendre");
  std::vector<double> diag(n, 0.0), off(n - 1);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  const TridiagonalEigen eig = tridiagonal_eigen(diag, off);

  QuadratureRule rule;
  rule.nodes = eig.values;
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double& x = rule.nodes[k];
    LegendrePair lp = legendre_eval(n, x);
    x -= lp.p / lp.dp;
    lp = legendre_eval(n, x);
    rule.weights[k] = 2.0 / ((1.0 - x * x) * lp.dp * lp.dp);
  }
  rule.interval_left = -1.0;
  rule.interval_right = 1.0;
  rule.exactness_degree = 2 * n - 1;
  rule.weight = {WeightKind::Legendre, 0.0};
  return rule;
}

QuadratureRule rule_from_recurrence(const RecurrenceCoeffs& rc, int n, double interval_left,
                                    double interval_right) {
  if (n < 1 || static_cast<std::size_t>(n) > rc.alpha.size() ||
      static_cast<std::size_t>(n) > rc.beta.size()) {
    throw std::invalid_argument("rule_from_recurrence: not enough recurrence coefficients");
  }
  std::vector<double> diag(rc.alpha.begin(), rc.alpha.begin() + n);
  std::vector<double> off(n - 1);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(rc.beta[k]);
  const TridiagonalEigen eig = tridiagonal_eigen(diag, off);

  QuadratureRule rule;
  rule.nodes = eig.values;
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.weights[k] = rc.beta[0] * eig.first_components[k] * eig.first_components[k];
  }
  rule.interval_left = interval_left;
  rule.interval_right = interval_right;
  rule.exactness_degree = 2 * n - 1;
  rule.weight = {WeightKind::Custom, 0.0};
  return rule;
}

RecurrenceCoeffs build_orthopoly(const std::function<double(double)>& weight,
                                 double interval_left, int n, double interval_right) {
  if (n < 1 || n > 32) throw std::invalid_argument("build_orthopoly: n must be in [1, 32]");
  if (!(interval_right > interval_left)) {
    throw std::invalid_argument("build_orthopoly: empty interval");
  }

  // Discrete measure (points, masses) standing in for weight(x) dx.
  std::vector<double> points, masses;
  if (std::isinf(interval_right)) {
    constexpr int kBase = 64;
    const QuadratureRule base = gauss_laguerre(kBase);
    for (int k = 0; k < kBase; ++k) {
      const double y = base.nodes[k];
      const double x = interval_left + y;
      points.push_back(x);
      masses.push_back(laguerre_weight_times_exp(kBase, y) * weight(x));
    }
  } else {
    constexpr int kBase = 128;
    const QuadratureRule base = gauss_legendre(kBase);
    const double mid = 0.5 * (interval_left + interval_right);
    const double half = 0.5 * (interval_right - interval_left);
    for (int k = 0; k < kBase; ++k) {
      const double x = mid + half * base.nodes[k];
      points.push_back(x);
      masses.push_back(half * base.weights[k] * weight(x));
    }
  }
  for (double m : masses) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw std::runtime_error("build_orthopoly: weight is negative or non-finite on the interval");
    }
  }

  const std::size_t npts = points.size();
  std::vector<double> p_prev(npts, 0.0), p(npts, 1.0), terms(npts);
  RecurrenceCoeffs rc;
  double norm_prev = 0.0;
  for (int k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < npts; ++i) terms[i] = masses[i] * p[i] * p[i];
    const double norm = pairwise_sum(terms);
    for (std::size_t i = 0; i < npts; ++i) terms[i] *= points[i];
    const double alpha = pairwise_sum(terms) / norm;
    const double beta = (k == 0) ? norm : norm / norm_prev;
    if (!(beta > 0.0) || !std::isfinite(beta) || !std::isfinite(alpha)) {
      throw std::runtime_error("build_orthopoly: recurrence lost positivity at k = " +
                               std::to_string(k));
    }
    rc.alpha.push_back(alpha);
    rc.beta.push_back(beta);
    for (std::size_t i = 0; i < npts; ++i) {
      const double next = (points[i] - alpha) * p[i] - (k == 0 ? 0.0 : beta * p_prev[i]);
      p_prev[i] = p[i];
      p[i] = next;
    }
    norm_prev = norm;
  }
  return rc;
}

double certify_exactness(const QuadratureRule& rule, const std::function<double(int)>& moment,
                         int max_degree) {
  if (max_degree < 0) max_degree = rule.exactness_degree;
  std::vector<double> terms(rule.size());
  double worst = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      terms[i] = rule.weights[i] * std::pow(rule.nodes[i], k);
    }
    const double exact = moment(k);
    worst = std::max(worst, std::abs(pairwise_sum(terms) - exact) / std::abs(exact));
  }
  return worst;
}

}  // namespace sl2c
