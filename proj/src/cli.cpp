#include "sl2c/cli.hpp"

#include <omp.h>

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2c/design_builder.hpp"
#include "sl2c/design_io.hpp"
#include "sl2c/quadrature.hpp"
#include "sl2c/su2_designs.hpp"
#include "sl2c/verification.hpp"

namespace sl2c {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool bundled_t(int t) { return t == 2 || t == 3 || t == 5; }

double weight_sum(const std::vector<WeightedElement>& elements) {
  std::vector<double> w;
  for (const auto& e : elements) w.push_back(e.weight);
  return pairwise_sum(w);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct BuildArgs {
  int t = 0;
  std::string variant = "standard";
  std::optional<int> n;
  std::string out;
  bool allow_any_t = false;
  std::string su2_file;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const auto variant = parse_variant(a.variant);
  if (!variant) throw UsageError("--variant must be standard or slocc");
  SL2CDesign design;
  if (bundled_t(a.t) && a.su2_file.empty()) {
    design = build_sl2c_design(a.t, *variant, a.n);
  } else {
    if (!a.allow_any_t) {
      throw UsageError("no polyhedral SU(2) design bundled for t = " + std::to_string(a.t) +
                       " (use --allow-any-t with --su2-file)");
    }
    if (a.su2_file.empty()) throw UsageError("--allow-any-t needs --su2-file");
    const DesignFile file = load_design(a.su2_file);
    const auto* su2 = std::get_if<SU2Design>(&file);
    if (!su2) throw FormatError(a.su2_file + " is not an SU(2) design");
    SU2Design compact = *su2;
    compact.t = a.t;
    const double fp = frame_potential(compact.elements, a.t);
    const double target = su2_trace_moment(a.t);
    if (std::abs(fp - target) > 1e-8) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "SU(2) file is not a " << a.t << "-design: frame potential " << fp << " vs " << target;
      throw CertificationError(msg.str());
    }
    design = assemble_product(compact, build_a_design(a.t, *variant, a.n));
  }
  const std::string text = to_json(design);
  if (a.out.empty() || a.out == "-") {
    out << text;
  } else {
    write_text_file(a.out, text);
    out << "elements: " << design.elements.size() << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", weight_sum(design.elements));
    out << "weight_sum: " << buf << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::size_t probes = 50;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string report;
  bool scaled = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const DesignFile design = load_design(a.file);
  VerifyOptions opt;
  opt.probes = a.probes;
  opt.seed = a.seed;
  opt.tol = a.tol;
  opt.scaled = a.scaled;
  const VerificationReport rep = verify_design(design, opt);
  const std::string text = rep.to_json();
  emit(text, a.report, out);
  if (!a.report.empty() && a.report != "-") {
    for (const auto& c : rep.checks) {
      out << (c.passed ? "ok   " : "FAIL ") << c.name << " residual=" << c.residual
          << " tol=" << c.tolerance << "\n";
    }
  }
  return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_su2(int t, const std::string& path, std::ostream& out) {
  if (!bundled_t(t)) throw UsageError("no polyhedral SU(2) design bundled for t = " + std::to_string(t));
  emit(to_json(build_su2_design(t)), path, out);
  return kExitOk;
}

int cmd_quad(int n, bool shifted, std::ostream& out) {
  if (n < 1 || n > 64) throw UsageError("--n must be in [1, 64]");
  const QuadratureRule rule = shifted ? shifted_laguerre(n) : gauss_laguerre(n);
  nlohmann::ordered_json doc;
  doc["schema"] = "quadrature/1";
  doc["n"] = n;
  doc["shift"] = shifted ? 1.0 : 0.0;
  doc["nodes"] = rule.nodes;
  doc["weights"] = rule.weights;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_info(const std::string& path, std::ostream& out) {
  const DesignFile file = load_design(path);
  nlohmann::ordered_json doc;
  if (const auto* su2 = std::get_if<SU2Design>(&file)) {
    doc["kind"] = "su2";
    doc["t"] = su2->t;
    doc["group"] = std::string(to_string(su2->group));
    doc["elements"] = su2->elements.size();
    doc["weight_sum"] = weight_sum(su2->elements);
    doc["frame_potential"] = frame_potential(su2->elements, su2->t);
  } else {
    const auto& d = std::get<SL2CDesign>(file);
    const std::size_t nk = expected_group_order(d.group);
    doc["kind"] = "sl2c";
    doc["t"] = d.t;
    doc["variant"] = std::string(to_string(d.variant));
    doc["group"] = std::string(to_string(d.group));
    doc["n_quadrature"] = d.n_quadrature;
    doc["compact_elements"] = nk;
    doc["elements"] = d.elements.size();
    doc["weight_sum"] = weight_sum(d.elements);
    std::vector<WeightedElement> compact;
    switch (d.group) {
      case GroupTag::Tetrahedral: compact = build_su2_design(2).elements; break;
      case GroupTag::Octahedral: compact = build_su2_design(3).elements; break;
      case GroupTag::Icosahedral: compact = build_su2_design(5).elements; break;
    }
    doc["frame_potential"] = frame_potential(compact, d.t);
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SL(2,C) t-designs: build, verify, inspect"};
  app.name("sl2c");
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Build an SL(2,C) design");
  c_build->add_option("--t", build.t, "Design strength")->required();
  c_build->add_option("--variant", build.variant, "standard | slocc");
  c_build->add_option("--n", build.n, "Quadrature order (>= minimal)");
  c_build->add_option("--out", build.out, "Output path (default stdout)");
  c_build->add_flag("--allow-any-t", build.allow_any_t, "Accept t outside {2,3,5}");
  c_build->add_option("--su2-file", build.su2_file, "SU(2) design file for the compact part");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Verify a design file against Haar oracles");
  c_verify->add_option("file", verify.file, "Design file")->required();
  c_verify->add_option("--probes", verify.probes, "Random probe pairs");
  c_verify->add_option("--seed", verify.seed, "Probe seed");
  c_verify->add_option("--tol", verify.tol, "Design-equation tolerance");
  c_verify->add_option("--report", verify.report, "Report path (default stdout)");
  c_verify->add_flag("--scaled", verify.scaled, "Divide residuals by max(1, max A-part moment)");

  int su2_t = 0;
  std::string su2_out;
  auto* c_su2 = app.add_subcommand("su2", "Export a polyhedral SU(2) design");
  c_su2->add_option("--t", su2_t, "Design strength")->required();
  c_su2->add_option("--out", su2_out, "Output path (default stdout)");

  int quad_n = 0;
  bool quad_shifted = false;
  auto* c_quad = app.add_subcommand("quad", "Print a Gauss-Laguerre rule");
  c_quad->add_option("--n", quad_n, "Number of nodes")->required();
  c_quad->add_flag("--shifted", quad_shifted, "Shift to [1, inf)");

  std::string info_file;
  auto* c_info = app.add_subcommand("info", "Summarize a design file");
  c_info->add_option("file", info_file, "Design file")->required();

  for (auto* sub : {c_build, c_verify, c_su2, c_quad, c_info}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (c_build->parsed()) return cmd_build(build, out);
    if (c_verify->parsed()) return cmd_verify(verify, out);
    if (c_su2->parsed()) return cmd_su2(su2_t, su2_out, out);
    if (c_quad->parsed()) return cmd_quad(quad_n, quad_shifted, out);
    if (c_info->parsed()) return cmd_info(info_file, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sl2c
