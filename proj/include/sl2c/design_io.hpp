#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sl2c/design_builder.hpp"
#include "sl2c/su2_designs.hpp"

namespace sl2c {

inline constexpr std::string_view kSl2cSchema = "sl2c-design/1";
inline constexpr std::string_view kSu2Schema = "su2-design/1";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported design document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using DesignFile = std::variant<SU2Design, SL2CDesign>;

/// Canonical serialization: fixed key order, one element per line, every
/// float printed with 17 significant digits. Parsing the output and writing
/// it again reproduces the same bytes.
std::string to_json(const SL2CDesign& design);
std::string to_json(const SU2Design& design);

DesignFile parse_design(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

DesignFile load_design(const std::filesystem::path& path);

}  // namespace sl2c
