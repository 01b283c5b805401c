#include <algorithm>
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "joints/curves.hpp"
#include "joints/generators.hpp"
#include "joints/joints.hpp"
#include "joints/partition.hpp"

using namespace joints;
using namespace joints::testing;

namespace {

std::map<Point3, std::uint64_t> joint_map(const std::vector<JointRecord>& js) {
  std::map<Point3, std::uint64_t> m;
  for (const auto& j : js) m[j.location] = j.multiplicity;
  return m;
}

std::map<Point3, std::uint64_t> joint_map(const CurveJoints& js) {
  std::map<Point3, std::uint64_t> m;
  for (const auto& j : js.joints) m[j.location] = j.multiplicity;
  return m;
}

}  // namespace

TEST_CASE("line joints are affine invariant") {
  std::mt19937_64 rng(101);
  std::size_t nonempty = 0;
  for (int i = 0; i < 200; ++i) {
    const auto lines = lattice_lines(rng, 9, 3);
    const auto f = random_affine(rng);
    std::vector<Line3> image;
    for (const auto& l : lines) image.push_back(f(l));
    const auto before = joint_map(detect_joints(LineConfig::from_lines(lines)));
    const auto after = joint_map(detect_joints(LineConfig::from_lines(image)));
    std::map<Point3, std::uint64_t> mapped;
    for (const auto& [p, n] : before) mapped[f(p)] = n;
    CHECK(mapped == after);
    nonempty += before.empty() ? 0 : 1;
  }
  CHECK(nonempty >= 100);
}

TEST_CASE("line joints do not depend on input order") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 200; ++i) {
    auto lines = lattice_lines(rng, 10, 3);
    const auto a = detect_joints(LineConfig::from_lines(lines));
    std::shuffle(lines.begin(), lines.end(), rng);
    const auto b = detect_joints(LineConfig::from_lines(lines));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].location == b[k].location);
      CHECK(a[k].multiplicity == b[k].multiplicity);
      CHECK(a[k].incident_line_ids == b[k].incident_line_ids);
    }
  }
}

TEST_CASE("adding a line never removes a joint or lowers N") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 200; ++i) {
    auto lines = lattice_lines(rng, 10, 3);
    const auto extra = lines.back();
    lines.pop_back();
    const auto small = joint_map(detect_joints(LineConfig::from_lines(lines)));
    lines.push_back(extra);
    const auto big = joint_map(detect_joints(LineConfig::from_lines(lines)));
    for (const auto& [p, n] : small) {
      REQUIRE(big.count(p) == 1);
      CHECK(big.at(p) >= n);
    }
  }
}

TEST_CASE("multiplicity ignores direction order and sign") {
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<Direction3> dirs;
    while (dirs.size() < 6) {
      const long x = c(rng), y = c(rng), z = c(rng);
      if (x == 0 && y == 0 && z == 0) continue;
      auto d = D(x, y, z);
      if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
    }
    const auto n = multiplicity(dirs);
    std::shuffle(dirs.begin(), dirs.end(), rng);
    CHECK(multiplicity(dirs) == n);
    std::vector<Direction3> flipped;
    for (const auto& d : dirs) flipped.push_back(D(-d[0].get_si(), -d[1].get_si(), -d[2].get_si()));
    CHECK(multiplicity(flipped) == n);
    CHECK(n <= 20);
  }
}

TEST_CASE("curve joints survive reparametrization") {
  std::mt19937_64 rng(105);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (int i = 0; i < 200; ++i) {
    auto curves = curve_bush(3 + static_cast<std::int64_t>(i % 2), 2, rng());
    const auto before = detect_curve_joints(curves);
    for (auto& c : curves) {
      long a = 0;
      while (a == 0) a = num(rng);
      c = c.reparametrized(Q(a, den(rng)), Q(num(rng), den(rng)));
    }
    const auto after = detect_curve_joints(curves);
    CHECK(joint_map(before) == joint_map(after));
    REQUIRE(before.joints.size() == after.joints.size());
    for (std::size_t k = 0; k < before.joints.size(); ++k)
      CHECK(before.joints[k].tangent_set.directions == after.joints[k].tangent_set.directions);
  }
}

TEST_CASE("curve joints are affine invariant") {
  std::mt19937_64 rng(106);
  for (int i = 0; i < 200; ++i) {
    const auto curves = curve_bush(3 + static_cast<std::int64_t>(i % 2), 2, rng());
    const auto f = random_affine(rng);
    std::vector<ParamCurve> image;
    for (const auto& c : curves) image.push_back(f(c));
    const auto before = joint_map(detect_curve_joints(curves));
    std::map<Point3, std::uint64_t> mapped;
    for (const auto& [p, n] : before) mapped[f(p)] = n;
    CHECK(mapped == joint_map(detect_curve_joints(image)));
  }
}

TEST_CASE("converged partitions keep every cell within the halving bound") {
  std::mt19937_64 rng(107);
  std::size_t converged = 0;
  for (int i = 0; i < 200; ++i) {
    const auto pts = random_points(24 + static_cast<std::int64_t>(i % 17), rng(), 50);
    const auto part = guth_katz_partition(pts, 3, rng());
    CHECK(verify_partition(pts, part).empty());
    CHECK(part.audit.nonempty_cells <= part.audit.target_cells);
    if (part.audit.all_converged) {
      ++converged;
      const std::size_t S = pts.points.size();
      CHECK(part.audit.max_cell_count <= (S + part.audit.target_cells - 1) / part.audit.target_cells);
    }
  }
  CHECK(converged >= 190);
}
