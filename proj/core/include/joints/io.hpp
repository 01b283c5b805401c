#pragma once

#include <string>
#include <vector>

#include "joints/curves.hpp"
#include "joints/generators.hpp"
#include "joints/joints.hpp"
#include "joints/partition.hpp"

namespace joints {

inline constexpr const char* kConfigFormat = "joints-config/1";

/// One input file: exactly one of the payloads is meaningful, per `kind`.
struct Config {
  enum class Kind { lines, curves, points, planar };
  Kind kind = Kind::lines;
  std::string provenance;
  LineConfig lines;
  std::vector<ParamCurve> curves;
  PointSet points;
  PlanarConfig planar;

  static Config of(LineConfig lines);
  static Config of(std::vector<ParamCurve> curves, std::string provenance);
  static Config of(PointSet points);
  static Config of(PlanarConfig planar, std::string provenance);
};

const char* kind_name(Config::Kind kind);

/// Builds the configuration a generator string describes. Generators that
/// can yield several kinds ("random") use `preferred`.
Config generate_config(const GeneratorSpec& spec, Config::Kind preferred);

/// Canonical text: fixed key order, one record per line, rationals as
/// reduced "p/q" strings, trailing newline. parse then serialize is the
/// identity on canonical text.
std::string serialize_config(const Config& config);

/// Throws ParseError naming `source` with line:column for syntax errors and a
/// JSON pointer for schema errors.
Config parse_config(const std::string& text, const std::string& source = "<input>");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace joints
