// Acceptance run: one PASS/FAIL line per criterion. `acceptance --only N` runs one.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sl2c/cartan.hpp"
#include "sl2c/design_builder.hpp"
#include "sl2c/quadrature.hpp"
#include "sl2c/su2_designs.hpp"
#include "sl2c/verification.hpp"

using namespace sl2c;

namespace {

// pinned tolerances
constexpr double kFrameTol = 1e-8;
constexpr double kMomentRelTol = 1e-10;
constexpr double kProbeTolT23 = 1e-9;
constexpr double kProbeTolT5 = 1e-8;
constexpr double kDenseTol = 1e-10;
constexpr double kJacobianTol = 1e-12;
constexpr double kExactRelTol = 1e-10;
constexpr double kSharpnessFloor = 1e-6;
constexpr double kVecTol = 1e-12;
constexpr double kSloccProbeTol = 1e-9;
constexpr double kSloccTraceTol = 1e-10;
constexpr double kNormTol = 1e-9;
constexpr std::size_t kProbes = 50;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double dense_entry_error(const SL2CDesign& d) {
  const int t = d.t;
  const std::size_t n = std::size_t{1} << (2 * t);
  CMat dense(n, n);
  for (const auto& e : d.elements) {
    dense += oracle::dense_kron(kron_power(e.matrix, t), kron_power(e.matrix.conjugate(), t)) * e.weight;
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    CVec e(n);
    e[c] = 1.0;
    const CVec col = factorized_oracle_apply(t, d.variant, e);
    for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, std::abs(dense(r, c) - col[r]));
  }
  return worst;
}

Outcome criterion1() {
  bool ok = true;
  std::string detail;
  for (auto [t, expect, budget] : {std::tuple{2, 1296UL, 1.0}, std::tuple{3, 6336UL, 1.0}, std::tuple{5, 54000UL, 30.0}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const SL2CDesign d = build_sl2c_design(t, Variant::Standard);
    const double secs = seconds_since(t0);
    ok = ok && d.elements.size() == expect && secs < budget;
    detail += "t=" + std::to_string(t) + ":" + std::to_string(d.elements.size()) + fmt(" (%.2fs) ", secs);
  }
  return {ok, detail};
}

Outcome criterion2() {
  bool ok = true;
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  for (int t : {2, 3, 5}) {
    const double fp = frame_potential(build_su2_design(t).elements, t);
    const double integrated = su2_trace_moment(t);
    const double catalan = oracle::catalan(t);
    const double err = std::max(std::abs(fp - integrated), std::abs(fp - catalan));
    ok = ok && err <= kFrameTol;
    detail += "t=" + std::to_string(t) + fmt(" fp=%.15g", fp) + fmt(" err=%.1e ", err);
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 5.0;
  return {ok, detail + fmt("(%.2fs)", secs)};
}

Outcome criterion3() {
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (Variant v : {Variant::Standard, Variant::Slocc}) {
    for (int t : {2, 3, 5}) {
      const ADesign a = build_a_design(t, v);
      const int p = weight_exponent(t, v);
      auto g = [](int k) { return oracle::upper_gamma_factorial(k); };
      const double mu = 0.5 * (g(p + 3) - 2 * g(p - 1) + g(p - 5));
      for (int j = -2 * t; j <= 2 * t; j += 2) {
        const double exact = 0.5 * (g(j + p + 3) - 2 * g(j + p - 1) + g(j + p - 5)) / mu;
        std::vector<double> terms;
        for (std::size_t b = 0; b < a.nodes.size(); ++b) terms.push_back(a.weights[b] * std::pow(a.nodes[b], j));
        worst = std::max(worst, std::abs(pairwise_sum(terms) - exact) / exact);
      }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= kMomentRelTol && secs < 1.0, fmt("max rel err %.2e", worst) + fmt(" (%.2fs)", secs)};
}

Outcome criterion4() {
  bool ok = true;
  std::string detail;
  for (int t : {2, 3, 5}) {
    const auto t0 = std::chrono::steady_clock::now();
    const SL2CDesign d = build_sl2c_design(t, Variant::Standard);
    const auto probes = make_probes(std::size_t{1} << (2 * t), kProbes, kSeed);
    const double res = probe_residual(
        d.elements, t, probes, [t](std::span<const Complex> v) { return factorized_oracle_apply(t, Variant::Standard, v); },
        1.0);
    const double tol = t == 5 ? kProbeTolT5 : kProbeTolT23;
    ok = ok && res <= tol;
    detail += "t=" + std::to_string(t) + fmt(" res=%.2e", res) + fmt(" tol=%.0e", tol) +
              fmt(" scaled=%.2e", res / oracle_scale(t, Variant::Standard)) + fmt(" (%.1fs); ", seconds_since(t0));
  }
  const double dense = dense_entry_error(build_sl2c_design(2, Variant::Standard));
  ok = ok && dense <= kDenseTol;
  detail += fmt("dense t=2 max entry err %.2e", dense);
  return {ok, detail};
}

Outcome criterion5() {
  std::vector<double> rs{0.1};
  for (int k = 1; k <= 12; ++k) rs.push_back(0.25 * k);
  double worst = 0.0, worst_alt = 0.0;
  for (double r : rs) {
    const double s = std::sinh(r);
    worst = std::max(worst, std::abs(jacobian_minor(r) - s * s));
    for (int col : {0, 1, 2, 3, 6}) worst_alt = std::max(worst_alt, std::abs(jacobian_minor(r, col)));
  }
  return {worst <= kJacobianTol && worst_alt <= kJacobianTol,
          fmt("max |minor - sinh^2| %.2e", worst) + fmt(", max alternative minor %.2e", worst_alt)};
}

Outcome criterion6() {
  bool ok = true;
  double worst_exact = 0.0;
  std::string sharp_fail;
  double smallest_sharp = INFINITY;
  for (int n = 1; n <= 20; ++n) {
    const QuadratureRule r = shifted_laguerre(n);
    const double exact = certify_exactness(r, oracle::upper_gamma_factorial, 2 * n - 1);
    worst_exact = std::max(worst_exact, exact);
    ok = ok && exact <= kExactRelTol;

    const double m = oracle::upper_gamma_factorial(2 * n);
    std::vector<double> terms;
    for (std::size_t i = 0; i < r.size(); ++i) terms.push_back(r.weights[i] * std::pow(r.nodes[i], 2 * n));
    const double sharp = std::abs(pairwise_sum(terms) - m) / m;
    smallest_sharp = std::min(smallest_sharp, sharp);
    if (!(sharp > kSharpnessFloor)) {
      ok = false;
      sharp_fail += (sharp_fail.empty() ? "" : ",") + std::to_string(n);
    }
  }
  std::string detail = fmt("max rel err deg<=2n-1 %.2e", worst_exact) +
                       fmt("; min deg-2n residual %.2e", smallest_sharp);
  if (!sharp_fail.empty()) detail += " (<= 1e-6 for n=" + sharp_fail + ")";
  return {ok, detail};
}

Outcome criterion7() {
  oracle::Gen g(7);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CMat a = g.matrix(2, 2), b = g.matrix(2, 2), c = g.matrix(2, 2);
    const CVec lhs = vectorize(a * b * c);
    const CVec phi_b = vectorize(b);
    const CVec rhs = oracle::dense_kron(a, c.transpose()) * std::span<const Complex>(phi_b);
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return {worst <= kVecTol, fmt("max err %.2e over 1000 triples", worst)};
}

Outcome criterion8() {
  const int t = 2;
  const SL2CDesign d = build_sl2c_design(t, Variant::Slocc);
  bool ok = d.elements.size() == 1584;
  double norm_err = 0.0;
  for (const auto& e : d.elements) norm_err = std::max(norm_err, std::abs(op_norm(e.matrix) - 1.0));
  ok = ok && norm_err <= kNormTol;

  const auto probes = make_probes(16, kProbes, kSeed);
  const double res = probe_residual(
      d.elements, t, probes, [](std::span<const Complex> v) { return factorized_oracle_apply(2, Variant::Slocc, v); },
      1.0);
  ok = ok && res <= kSloccProbeTol;

  oracle::Gen g(8);
  double trace_err = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const CMat rho = g.density(4);
    const double tr = average_state(d.elements, t, rho).trace().real();
    std::vector<double> terms;
    for (const auto& e : d.elements) terms.push_back(e.weight * success_probability(e.matrix, rho, t));
    trace_err = std::max(trace_err, std::abs(tr - pairwise_sum(terms)));
  }
  ok = ok && trace_err <= kSloccTraceTol;
  return {ok, std::to_string(d.elements.size()) + " elements" + fmt(", max |norm-1| %.1e", norm_err) +
                  fmt(", probe res %.2e", res) + fmt(", trace err %.2e", trace_err)};
}

const char* kTitles[] = {
    "",
    "design cardinalities 1296/6336/54000",
    "SU(2) frame potential equals Catalan value",
    "A-part moments exact for |j| <= 2t",
    "design equation against factorized Haar oracle",
    "Jacobian minor equals sinh^2(r)",
    "shifted Gauss-Laguerre exact to degree 2n-1, not 2n",
    "vectorization identity Phi(ABC) = (A x C^T) Phi(B)",
    "SLOCC variant design equation and success-weighted trace",
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--only N]\n");
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::fprintf(stderr, "criterion must be 1..8\n");
    return 2;
  }
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                                criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 && n != only) continue;
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s | %s\n", o.pass ? "PASS" : "FAIL", n, kTitles[n], o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
