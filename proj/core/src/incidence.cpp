#include "joints/incidence.hpp"

#include "joints/error.hpp"
#include "joints/joints.hpp"

namespace joints {
namespace {

template <class P, class L>
std::uint64_t count_pairs(std::span<const P> points, std::span<const L> lines) {
  std::uint64_t n = 0;
  for (const auto& p : points) {
    for (const auto& l : lines) {
      if (contains(l, p)) ++n;
    }
  }
  return n;
}

Real st_bound(std::size_t P, std::size_t L) {
  using boost::multiprecision::cbrt;
  const Real pl = cbrt(Real(P) * Real(L));
  return pl * pl + Real(P) + Real(L);
}

}  // namespace

std::uint64_t count_incidences(std::span<const Point3> points, std::span<const Line3> lines) {
  return count_pairs(points, lines);
}

std::uint64_t count_incidences(std::span<const Point2> points, std::span<const Line2> lines) {
  return count_pairs(points, lines);
}

SzemerediTrotterReport st_report(std::span<const Point2> points, std::span<const Line2> lines) {
  SzemerediTrotterReport r;
  r.incidences = count_incidences(points, lines);
  r.bound = st_bound(points.size(), lines.size());
  r.ratio = r.bound == 0 ? Real(0) : Real(r.incidences) / r.bound;
  return r;
}

SzemerediTrotterReport st_report(std::span<const Point3> points, std::span<const Line3> lines,
                                 std::uint64_t seed) {
  auto projected = project_generic(points, lines, seed);
  const auto& planar = projected.planar;
  auto r = st_report(std::span<const Point2>(planar.points), std::span<const Line2>(planar.lines));
  r.projection = std::move(projected.certificate);
  return r;
}

RichPointsReport rich_points_report(std::span<const Line3> lines, std::uint64_t k) {
  if (k < 2) throw InvalidArgument("rich point threshold k must be at least 2");
  RichPointsReport r;
  for (const auto& [point, members] : concurrency_points(lines)) {
    if (members.size() >= k) ++r.rich_points;
  }
  const Scalar L(static_cast<unsigned long>(lines.size()));
  const Scalar kk(static_cast<unsigned long>(k));
  r.quadratic_term = L * L / (kk * kk * kk);
  r.linear_term = L / kk;
  return r;
}

}  // namespace joints
