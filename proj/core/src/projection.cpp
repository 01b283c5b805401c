#include "joints/projection.hpp"

#include <algorithm>
#include <random>

#include "joints/error.hpp"

namespace joints {
namespace {

using IVec = std::array<Integer, 3>;

IVec cross(const IVec& a, const IVec& b) {
  return {Integer(a[1] * b[2] - a[2] * b[1]), Integer(a[2] * b[0] - a[0] * b[2]),
          Integer(a[0] * b[1] - a[1] * b[0])};
}

Scalar dot(const IVec& u, const Point3& p) { return u[0] * p.x + u[1] * p.y + u[2] * p.z; }

Integer dot(const IVec& u, const Direction3& d) {
  return u[0] * d[0] + u[1] * d[1] + u[2] * d[2];
}

template <class T, class Less>
std::size_t count_distinct(std::vector<T> items, Less less) {
  std::sort(items.begin(), items.end(), less);
  auto eq = [&](const T& a, const T& b) { return !less(a, b) && !less(b, a); };
  return static_cast<std::size_t>(std::unique(items.begin(), items.end(), eq) - items.begin());
}

}  // namespace

std::optional<PlanarConfiguration> project_along(std::span<const Point3> points,
                                                 std::span<const Line3> lines,
                                                 const IVec& v) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) return std::nullopt;

  // Cross with the axis on which v is smallest; never parallel to v.
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (abs(v[i]) < abs(v[axis])) axis = i;
  }
  IVec e{0, 0, 0};
  e[axis] = 1;
  const IVec u1 = cross(v, e);
  const IVec u2 = cross(v, u1);

  PlanarConfiguration out;
  out.points.reserve(points.size());
  for (const auto& p : points) out.points.push_back(Point2{dot(u1, p), dot(u2, p)});

  out.lines.reserve(lines.size());
  for (const auto& l : lines) {
    Integer a = dot(u1, l.dir);
    Integer b = dot(u2, l.dir);
    if (a == 0 && b == 0) return std::nullopt;
    out.lines.push_back(canonicalize_line(Point2{dot(u1, l.base), dot(u2, l.base)},
                                          {Scalar(a), Scalar(b)}, l.id));
  }

  auto p3less = [](const Point3& a, const Point3& b) { return a < b; };
  auto p2less = [](const Point2& a, const Point2& b) { return a < b; };
  if (count_distinct(std::vector<Point3>(points.begin(), points.end()), p3less) !=
      count_distinct(out.points, p2less)) {
    return std::nullopt;
  }
  auto l3less = [](const Line3& a, const Line3& b) { return geometry_less(a, b); };
  auto l2less = [](const Line2& a, const Line2& b) { return geometry_less(a, b); };
  if (count_distinct(std::vector<Line3>(lines.begin(), lines.end()), l3less) !=
      count_distinct(out.lines, l2less)) {
    return std::nullopt;
  }

  // Projection preserves incidences; reject any that it creates.
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (contains(out.lines[j], out.points[i]) && !contains(lines[j], points[i])) {
        return std::nullopt;
      }
    }
  }
  return out;
}

ProjectedConfiguration project_generic(std::span<const Point3> points,
                                       std::span<const Line3> lines, std::uint64_t seed,
                                       int max_draws) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  int rejections = 0;
  while (rejections < max_draws) {
    IVec v{Integer(coord(rng)), Integer(coord(rng)), Integer(coord(rng))};
    if (auto planar = project_along(points, lines, v)) {
      return {std::move(*planar), ProjectionCertificate{std::move(v), rejections}};
    }
    ++rejections;
  }
  throw GenericityExhausted("no generic projection direction after " +
                            std::to_string(max_draws) + " draws");
}

}  // namespace joints
