#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "joints/geometry.hpp"

namespace joints {

struct PlanarConfiguration {
  std::vector<Point2> points;  // same order as the input points
  std::vector<Line2> lines;    // same order (and ids) as the input lines
};

struct ProjectionCertificate {
  std::array<Integer, 3> direction;  // kernel of the accepted projection
  int rejections = 0;
};

struct ProjectedConfiguration {
  PlanarConfiguration planar;
  ProjectionCertificate certificate;
};

inline constexpr int kDefaultGenericityRetries = 64;

/// Parallel projection along `direction` onto the plane spanned by two integer
/// vectors orthogonal to it. Returns nullopt when the projection is not
/// generic for this configuration: two distinct points or two distinct lines
/// collide, a line is parallel to `direction`, or a point lands on the image of
/// a line it was not on.
std::optional<PlanarConfiguration> project_along(std::span<const Point3> points,
                                                 std::span<const Line3> lines,
                                                 const std::array<Integer, 3>& direction);

/// Draws projection directions from a seeded generator until project_along
/// accepts one. Throws GenericityExhausted after `max_draws` rejections.
ProjectedConfiguration project_generic(std::span<const Point3> points,
                                       std::span<const Line3> lines, std::uint64_t seed,
                                       int max_draws = kDefaultGenericityRetries);

}  // namespace joints
