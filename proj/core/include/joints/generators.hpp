#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "joints/curves.hpp"
#include "joints/geometry.hpp"
#include "joints/joints.hpp"
#include "joints/partition.hpp"

namespace joints {

struct PlanarConfig {
  std::vector<Point2> points;
  std::vector<Line2> lines;
};

/// Parsed generator string, e.g. "grid:5", "bush:20:seed1",
/// "curve_bush:6:3:seed2", "grid:2+coplanar:4".
struct GeneratorSpec {
  enum class Kind {
    grid,             // grid:k
    bush,             // bush:L[:seedN]
    random,           // random:L[:seedN[:bound]]  lines, or points for partition
    coplanar_pencil,  // coplanar:L
    mixed,            // a+b+...
    curve_bush,       // curve_bush:L:b[:seedN]
    curve_grid,       // curve_grid:k
    planar_grid,      // planar_grid:k
    points,           // points:S[:seedN[:bound]]  always points
  };
  Kind kind = Kind::grid;
  std::int64_t k = 0;  // grid side, or L for the L-parametrised kinds
  std::int64_t b = 0;  // curve degree bound
  std::uint64_t seed = 0;
  std::int64_t bound = 0;  // coordinate bound for random
  std::vector<GeneratorSpec> parts;

  /// Canonical text with every default filled in.
  std::string to_string() const;
  bool yields_lines() const;
  bool yields_curves() const;
};

/// Throws ParseError for malformed text and ParameterOutOfRange for values
/// outside the documented ranges. Seeds omitted from the text take
/// `default_seed`.
GeneratorSpec parse_generator(const std::string& text, std::uint64_t default_seed = 1);

inline constexpr std::int64_t kDefaultRandomLineBound = 3;
inline constexpr std::int64_t kDefaultRandomPointBound = 1000;

LineConfig grid_lines(std::int64_t k);
LineConfig bush_lines(std::int64_t L, std::uint64_t seed);
LineConfig random_lines(std::int64_t L, std::uint64_t seed,
                        std::int64_t bound = kDefaultRandomLineBound);
LineConfig coplanar_pencil(std::int64_t L);
std::vector<ParamCurve> curve_bush(std::int64_t L, std::int64_t b, std::uint64_t seed);
std::vector<ParamCurve> curve_grid(std::int64_t k);
PointSet random_points(std::int64_t S, std::uint64_t seed,
                       std::int64_t bound = kDefaultRandomPointBound);
/// k x k integer points with the k vertical and k horizontal lines.
PlanarConfig planar_grid(std::int64_t k);

LineConfig generate_lines(const GeneratorSpec& spec);
std::vector<ParamCurve> generate_curves(const GeneratorSpec& spec);
PointSet generate_points(const GeneratorSpec& spec);
PlanarConfig generate_planar(const GeneratorSpec& spec);

}  // namespace joints
