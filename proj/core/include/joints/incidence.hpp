#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "joints/geometry.hpp"
#include "joints/projection.hpp"
#include "joints/real.hpp"

namespace joints {

std::uint64_t count_incidences(std::span<const Point3> points, std::span<const Line3> lines);
std::uint64_t count_incidences(std::span<const Point2> points, std::span<const Line2> lines);

struct SzemerediTrotterReport {
  std::uint64_t incidences = 0;
  Real bound;  // |P|^{2/3} |L|^{2/3} + |P| + |L|
  Real ratio;  // incidences / bound, 0 when the bound is 0
  std::optional<ProjectionCertificate> projection;
};

SzemerediTrotterReport st_report(std::span<const Point2> points, std::span<const Line2> lines);

/// Spatial inputs are first projected to a generic plane; the incidence count
/// reported is the planar one (equal to the spatial one by construction).
SzemerediTrotterReport st_report(std::span<const Point3> points, std::span<const Line3> lines,
                                 std::uint64_t seed = 0);

struct RichPointsReport {
  std::uint64_t rich_points = 0;  // points on >= k lines
  Scalar quadratic_term;          // L^2 / k^3
  Scalar linear_term;             // L / k
};

/// Requires k >= 2.
RichPointsReport rich_points_report(std::span<const Line3> lines, std::uint64_t k);

}  // namespace joints
