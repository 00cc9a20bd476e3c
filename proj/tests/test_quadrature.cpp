#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sl2c/quadrature.hpp"

using namespace sl2c;

namespace {

double gamma_moment(int k) { return oracle::upper_gamma_factorial(k); }

// ∫_0^∞ y^k e^{-y} dy = k!
double factorial(int k) {
  double f = 1.0;
  for (int m = 2; m <= k; ++m) f *= m;
  return f;
}

}  // namespace

TEST_CASE("laguerre_eval") {
  for (double y : {0.0, 0.7, 3.0, 11.0}) CHECK(laguerre_eval(0, y) == 1.0);
  CHECK(laguerre_eval(1, 0.0) == 1.0);
  CHECK(laguerre_eval(1, 1.0) == 0.0);
  for (double y : {0.0, 0.5, 2.0, 7.0}) CHECK(laguerre_eval(2, y) == doctest::Approx((y * y - 4 * y + 2) / 2));
}

TEST_CASE("tridiagonal_eigen on a known spectrum") {
  // path graph Laplacian-like: 2 on diagonal, -1 off; eigenvalues 2 - 2cos(kπ/(n+1))
  const int n = 6;
  std::vector<double> d(n, 2.0), e(n - 1, -1.0);
  const TridiagonalEigen eig = tridiagonal_eigen(d, e);
  for (int k = 1; k <= n; ++k) {
    CHECK(eig.values[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-13));
  }
  double s = 0;
  for (double z : eig.first_components) s += z * z;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(tridiagonal_eigen(std::vector<double>{}, std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("gauss_laguerre examples") {
  const QuadratureRule one = gauss_laguerre(1);
  CHECK(one.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const QuadratureRule two = gauss_laguerre(2);
  CHECK(std::abs(two.nodes[0] - (2.0 - std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(two.nodes[1] - (2.0 + std::sqrt(2.0))) <= 1e-14);

  CHECK(gauss_laguerre(4).integrate([](double y) { return y; }) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_laguerre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(65), std::invalid_argument);
}

TEST_CASE("gauss_laguerre exactness against factorials") {
  for (int n = 1; n <= 20; ++n) {
    const QuadratureRule r = gauss_laguerre(n);
    CHECK(r.exactness_degree == 2 * n - 1);
    CHECK(certify_exactness(r, factorial) <= 1e-10);
  }
}

TEST_CASE("shifted_laguerre examples") {
  const QuadratureRule r3 = shifted_laguerre(3);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(r3.nodes[i] - oracle::kShifted3Nodes[i]) <= 1e-14 * oracle::kShifted3Nodes[i]);
    CHECK(std::abs(r3.weights[i] - oracle::kShifted3Weights[i]) <= 1e-13 * oracle::kShifted3Weights[i]);
  }
  CHECK(r3.integrate([](double x) { return x * x; }) == doctest::Approx(5.0 / M_E).epsilon(1e-14));
  CHECK(r3.interval_left == 1.0);
}

TEST_CASE("shifted rules: nodes > 1, positive weights, mass 1/e") {
  for (int n = 1; n <= 40; ++n) {
    const QuadratureRule r = shifted_laguerre(n);
    double mass = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(r.nodes[i] > 1.0);
      CHECK(r.weights[i] > 0.0);
      mass += r.weights[i];
    }
    CHECK(std::abs(mass - std::exp(-1.0)) <= 1e-12);
  }
}

TEST_CASE("closed-form shifted weights agree with scaled Golub-Welsch weights") {
  for (int n = 1; n <= 30; ++n) {
    const QuadratureRule s = shifted_laguerre(n);
    const QuadratureRule g = gauss_laguerre(n);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(s.nodes[i] - (g.nodes[i] + 1.0)) <= 1e-13 * s.nodes[i]);
      CHECK(std::abs(s.weights[i] - g.weights[i] / M_E) <= 1e-10 * s.weights[i] + 1e-300);
    }
  }
}

TEST_CASE("exactness theorem: degree <= 2n-1 exact, degree 2n not") {
  for (int n = 1; n <= 20; ++n) {
    const QuadratureRule r = shifted_laguerre(n);
    CHECK(certify_exactness(r, gamma_moment) <= 1e-11);

    // p_n² witness: the rule sees zero, the integral is positive
    auto pn2 = [n](double x) {
      const double l = laguerre_eval(n, x - 1.0);
      return l * l;
    };
    CHECK(r.integrate(pn2) <= 1e-12);
    CHECK(std::abs(r.integrate(pn2) - std::exp(-1.0)) > 0.3);  // ∫ L_n(y)² e^{-y} dy · e⁻¹ = e⁻¹
  }
  // monomial x^{2n}: visibly inexact for small n
  for (int n = 1; n <= 10; ++n) {
    const QuadratureRule r = shifted_laguerre(n);
    const double exact = gamma_moment(2 * n);
    CHECK(std::abs(r.integrate([n](double x) { return std::pow(x, 2 * n); }) - exact) / exact > 1e-6);
  }
  const QuadratureRule r1 = shifted_laguerre(1);
  CHECK(certify_exactness(r1, gamma_moment, 1) <= 1e-14);
}

TEST_CASE("Laguerre roots interlace") {
  for (int n = 1; n <= 20; ++n) {
    const auto a = gauss_laguerre(n).nodes;
    const auto b = gauss_laguerre(n + 1).nodes;
    for (int i = 0; i < n; ++i) {
      CHECK(b[i] < a[i]);
      CHECK(a[i] < b[i + 1]);
    }
  }
}

TEST_CASE("eigenvalue nodes are Newton-stable roots of L_n") {
  for (int n = 2; n <= 30; ++n) {
    for (double y : gauss_laguerre(n).nodes) {
      // L_n'(y) = n (L_n(y) - L_{n-1}(y)) / y
      const double ln = laguerre_eval(n, y);
      const double dn = n * (ln - laguerre_eval(n - 1, y)) / y;
      CHECK(std::abs(ln / dn) <= 1e-12 * std::max(1.0, y));
    }
  }
}

TEST_CASE("gauss_legendre") {
  for (int n = 1; n <= 40; ++n) {
    const QuadratureRule r = gauss_legendre(n);
    auto moment = [](int k) { return k % 2 == 1 ? 0.0 : 2.0 / (k + 1); };
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      CHECK(std::abs(s - moment(k)) <= 1e-13);
    }
  }
}

TEST_CASE("build_orthopoly reproduces the Laguerre recurrence") {
  const RecurrenceCoeffs rc = build_orthopoly([](double y) { return std::exp(-y); }, 0.0, 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(std::abs(rc.alpha[k] - (2 * k + 1)) <= 1e-8);
    if (k > 0) CHECK(std::abs(rc.beta[k] - double(k) * k) <= 1e-8);
  }
  CHECK(std::abs(rc.beta[0] - 1.0) <= 1e-8);

  const RecurrenceCoeffs sh = build_orthopoly([](double x) { return std::exp(-x); }, 1.0, 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(std::abs(sh.alpha[k] - (rc.alpha[k] + 1.0)) <= 1e-8);
    if (k > 0) CHECK(std::abs(sh.beta[k] - rc.beta[k]) <= 1e-8);
  }

  const QuadratureRule from_rc = rule_from_recurrence(rc, 5, 0.0, INFINITY);
  const QuadratureRule direct = gauss_laguerre(5);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(from_rc.nodes[i] - direct.nodes[i]) <= 1e-8 * direct.nodes[i]);
}

TEST_CASE("build_orthopoly on a finite interval and failure modes") {
  const RecurrenceCoeffs rc = build_orthopoly([](double) { return 1.0; }, 1.0, 3, 2.0);
  const QuadratureRule r = rule_from_recurrence(rc, 3, 1.0, 2.0);
  for (double x : r.nodes) {
    CHECK(x > 1.0);
    CHECK(x < 2.0);
  }
  CHECK(r.integrate([](double x) { return x * x * x * x * x; }) == doctest::Approx((64.0 - 1.0) / 6.0));
  CHECK_THROWS_AS(build_orthopoly([](double x) { return x - 1.5; }, 1.0, 3, 2.0), std::runtime_error);
  CHECK_THROWS_AS(build_orthopoly([](double) { return 1.0; }, 2.0, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rule_from_recurrence(rc, 4, 1.0, 2.0), std::invalid_argument);
}
