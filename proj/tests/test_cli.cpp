#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "sl2c/cli.hpp"
#include "sl2c/design_io.hpp"

using namespace sl2c;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "sl2c_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("build, info, verify round trip") {
  const fs::path d2 = scratch() / "d2.json";
  const Run b = run({"build", "--t", "2", "--variant", "standard", "--out", d2.string()});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("elements: 1296") != std::string::npos);

  const auto info = nlohmann::json::parse(run({"info", d2.string()}).out);
  CHECK(info["t"] == 2);
  CHECK(info["elements"] == 1296);
  CHECK(std::abs(info["weight_sum"].get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(info["frame_potential"].get<double>() - 2.0) <= 1e-8);

  const Run v = run({"verify", d2.string()});
  CHECK(v.code == kExitOk);
  const auto rep = nlohmann::json::parse(v.out);
  CHECK(rep["passed"] == true);
  for (const auto& c : rep["checks"])
    if (c["name"] == "design_equation") CHECK(c["residual"].get<double>() <= 1e-9);

  // load → re-serialize is byte-identical
  const std::string text = read_text_file(d2);
  CHECK(std::visit([](const auto& d) { return to_json(d); }, parse_design(text)) == text);
}

TEST_CASE("verify is reproducible") {
  const fs::path d2 = scratch() / "d2r.json";
  REQUIRE(run({"build", "--t", "2", "--out", d2.string()}).code == kExitOk);
  const fs::path r1 = scratch() / "r1.json", r2 = scratch() / "r2.json";
  CHECK(run({"verify", d2.string(), "--probes", "1", "--seed", "99", "--report", r1.string()}).code == kExitOk);
  CHECK(run({"verify", d2.string(), "--probes", "1", "--seed", "99", "--report", r2.string()}).code == kExitOk);
  CHECK(read_text_file(r1) == read_text_file(r2));
  CHECK(run({"--threads", "1", "verify", d2.string(), "--probes", "1", "--seed", "99"}).out == read_text_file(r1));
}

TEST_CASE("hand-corrupted file fails with named checks") {
  const fs::path good = scratch() / "good.json", bad = scratch() / "bad.json";
  REQUIRE(run({"build", "--t", "2", "--out", good.string()}).code == kExitOk);
  auto doc = nlohmann::ordered_json::parse(read_text_file(good));
  doc["elements"][0]["w"] = doc["elements"][0]["w"].get<double>() + 1e-3;
  write_text_file(bad, doc.dump());
  const Run v = run({"verify", bad.string()});
  CHECK(v.code == kExitFailure);
  const auto rep = nlohmann::json::parse(v.out);
  CHECK(rep["passed"] == false);
  bool weight_failed = false;
  for (const auto& c : rep["checks"])
    if (c["name"] == "weight_sum") weight_failed = !c["passed"].get<bool>();
  CHECK(weight_failed);
}

TEST_CASE("slocc build sizes") {
  const Run b = run({"build", "--t", "5", "--variant", "slocc", "--out", (scratch() / "s5.json").string()});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("elements: 61200") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"build", "--t", "4"}).code == kExitUsage);
  CHECK(run({"build", "--t", "2", "--variant", "weird"}).code == kExitUsage);
  CHECK(run({"build", "--t", "2", "--n", "3"}).code == kExitUsage);
  CHECK(run({"su2", "--t", "4"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"quad", "--n", "0"}).code == kExitUsage);
  CHECK(run({"build", "--t", "4", "--allow-any-t"}).code == kExitUsage);
}

TEST_CASE("I/O errors") {
  CHECK(run({"verify", "/nonexistent/x.json"}).code == kExitIo);
  CHECK(run({"info", "/nonexistent/x.json"}).code == kExitIo);
  const fs::path junk = scratch() / "junk.json";
  write_text_file(junk, "not json");
  CHECK(run({"info", junk.string()}).code == kExitIo);
  CHECK(run({"build", "--t", "2", "--out", "/nonexistent/dir/d.json"}).code == kExitIo);
}

TEST_CASE("quad and su2 dumps") {
  const auto q = nlohmann::json::parse(run({"quad", "--n", "9", "--shifted"}).out);
  CHECK(q["nodes"].size() == 9);
  double mass = 0;
  for (const auto& x : q["nodes"]) CHECK(x.get<double>() > 1.0);
  for (const auto& w : q["weights"]) mass += w.get<double>();
  CHECK(std::abs(mass - std::exp(-1.0)) <= 1e-12);

  const Run s = run({"su2", "--t", "5"});
  CHECK(s.code == kExitOk);
  const DesignFile f = parse_design(s.out);
  REQUIRE(std::holds_alternative<SU2Design>(f));
  CHECK(std::get<SU2Design>(f).elements.size() == 60);
}

TEST_CASE("custom SU(2) file with --allow-any-t") {
  const fs::path su5 = scratch() / "su5.json";
  REQUIRE(run({"su2", "--t", "5", "--out", su5.string()}).code == kExitOk);
  const fs::path d4 = scratch() / "d4.json";
  const Run b = run({"build", "--t", "4", "--allow-any-t", "--su2-file", su5.string(), "--out", d4.string()});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("elements: 46800") != std::string::npos);  // 60·13·60

  // tetrahedral group is not a 4-design
  const fs::path su2 = scratch() / "su2.json";
  REQUIRE(run({"su2", "--t", "2", "--out", su2.string()}).code == kExitOk);
  CHECK(run({"build", "--t", "4", "--allow-any-t", "--su2-file", su2.string()}).code == kExitFailure);
}
