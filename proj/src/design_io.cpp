#include "sl2c/design_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sl2c {

namespace {

void append_double(std::string& out, double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_elements(std::string& out, const std::vector<WeightedElement>& elements) {
  out += "  \"elements\": [";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CMat& m = elements[i].matrix;
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"m\": [";
    for (std::size_t r = 0; r < 2; ++r) {
      out += r == 0 ? "[" : ", [";
      for (std::size_t c = 0; c < 2; ++c) {
        out += c == 0 ? "[" : ", [";
        append_double(out, m(r, c).real());
        out += ", ";
        append_double(out, m(r, c).imag());
        out += "]";
      }
      out += "]";
    }
    out += "], \"w\": ";
    append_double(out, elements[i].weight);
    out += "}";
  }
  out += elements.empty() ? "]\n" : "\n  ]\n";
}

std::vector<WeightedElement> parse_elements(const nlohmann::json& doc) {
  const auto& arr = doc.at("elements");
  if (!arr.is_array()) throw FormatError("\"elements\" must be an array");
  std::vector<WeightedElement> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    const auto& m = item.at("m");
    if (!m.is_array() || m.size() != 2) throw FormatError("element matrix must be 2x2");
    CMat mat(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) throw FormatError("element matrix must be 2x2");
      for (std::size_t c = 0; c < 2; ++c) {
        const auto& z = m[r][c];
        if (!z.is_array() || z.size() != 2) throw FormatError("matrix entries must be [re, im]");
        mat(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    if (!mat.all_finite()) throw FormatError("non-finite matrix entry");
    const double w = item.at("w").get<double>();
    if (!std::isfinite(w)) throw FormatError("non-finite weight");
    out.push_back({std::move(mat), w});
  }
  return out;
}

GroupTag parse_group(const nlohmann::json& doc) {
  const auto tag = parse_group_tag(doc.at("group").get<std::string>());
  if (!tag) throw FormatError("unknown group tag");
  return *tag;
}

}  // namespace

std::string to_json(const SL2CDesign& design) {
  std::string out = "{\n";
  out += "  \"schema\": \"" + std::string(kSl2cSchema) + "\",\n";
  out += "  \"t\": " + std::to_string(design.t) + ",\n";
  out += "  \"variant\": \"" + std::string(to_string(design.variant)) + "\",\n";
  out += "  \"group\": \"" + std::string(to_string(design.group)) + "\",\n";
  out += "  \"n_quadrature\": " + std::to_string(design.n_quadrature) + ",\n";
  append_elements(out, design.elements);
  out += "}\n";
  return out;
}

std::string to_json(const SU2Design& design) {
  std::string out = "{\n";
  out += "  \"schema\": \"" + std::string(kSu2Schema) + "\",\n";
  out += "  \"t\": " + std::to_string(design.t) + ",\n";
  out += "  \"group\": \"" + std::string(to_string(design.group)) + "\",\n";
  append_elements(out, design.elements);
  out += "}\n";
  return out;
}

DesignFile parse_design(std::string_view text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const std::string schema = doc.at("schema").get<std::string>();
    if (schema == kSl2cSchema) {
      SL2CDesign d;
      d.t = doc.at("t").get<int>();
      const auto variant = parse_variant(doc.at("variant").get<std::string>());
      if (!variant) throw FormatError("unknown variant");
      d.variant = *variant;
      d.group = parse_group(doc);
      d.n_quadrature = doc.at("n_quadrature").get<int>();
      d.elements = parse_elements(doc);
      return d;
    }
    if (schema == kSu2Schema) {
      SU2Design d;
      d.t = doc.at("t").get<int>();
      d.group = parse_group(doc);
      d.elements = parse_elements(doc);
      return d;
    }
    throw FormatError("unsupported schema \"" + schema + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed design document: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DesignFile load_design(const std::filesystem::path& path) { return parse_design(read_text_file(path)); }

}  // namespace sl2c
