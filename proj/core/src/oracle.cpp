#include "joints/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace joints::oracle {
namespace {

using Vec = std::array<Scalar, 3>;

Vec as_vec(const Point3& p) { return {p.x, p.y, p.z}; }
Vec as_vec(const Direction3& d) { return {Scalar(d[0]), Scalar(d[1]), Scalar(d[2])}; }

bool on_line(const Point3& p, const Line3& l) {
  const Vec d = as_vec(l.dir);
  const Vec w{p.x - l.base.x, p.y - l.base.y, p.z - l.base.z};
  return w[1] * d[2] - w[2] * d[1] == 0 && w[2] * d[0] - w[0] * d[2] == 0 &&
         w[0] * d[1] - w[1] * d[0] == 0;
}

// Solves b1 + t d1 = b2 + u d2 by trying each pair of coordinates as a 2x2
// system, then checking the third.
std::optional<Point3> meet(const Line3& l1, const Line3& l2) {
  const Vec b1 = as_vec(l1.base), d1 = as_vec(l1.dir);
  const Vec b2 = as_vec(l2.base), d2 = as_vec(l2.dir);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      // t d1[i] - u d2[i] = b2[i] - b1[i], same for j.
      const Scalar det = -d1[i] * d2[j] + d2[i] * d1[j];
      if (det == 0) continue;
      const Scalar ri = b2[i] - b1[i];
      const Scalar rj = b2[j] - b1[j];
      const Scalar t = (-ri * d2[j] + d2[i] * rj) / det;
      const Point3 p(b1[0] + t * d1[0], b1[1] + t * d1[1], b1[2] + t * d1[2]);
      if (on_line(p, l2)) return p;
      return std::nullopt;
    }
  }
  return std::nullopt;  // parallel
}

Scalar det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

std::vector<OracleJoint> brute_force_joints(std::span<const Line3> lines) {
  std::vector<Point3> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto p = meet(lines[i], lines[j])) {
        if (std::find(candidates.begin(), candidates.end(), *p) == candidates.end()) {
          candidates.push_back(*p);
        }
      }
    }
  }
  std::vector<OracleJoint> out;
  for (const auto& p : candidates) {
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (on_line(p, lines[i])) through.push_back(i);
    }
    std::uint64_t n = 0;
    for (std::size_t a = 0; a < through.size(); ++a) {
      for (std::size_t b = a + 1; b < through.size(); ++b) {
        for (std::size_t c = b + 1; c < through.size(); ++c) {
          if (det3(as_vec(lines[through[a]].dir), as_vec(lines[through[b]].dir),
                   as_vec(lines[through[c]].dir)) != 0) {
            ++n;
          }
        }
      }
    }
    if (n == 0) continue;
    OracleJoint j{p, {}, n};
    for (auto i : through) j.lines.push_back(lines[i].id);
    std::sort(j.lines.begin(), j.lines.end());
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(),
            [](const OracleJoint& a, const OracleJoint& b) { return a.location < b.location; });
  return out;
}

std::vector<std::string> compare(std::span<const JointRecord> engine,
                                 std::span<const OracleJoint> reference) {
  std::vector<std::string> issues;
  auto where = [](const Point3& p) {
    std::ostringstream os;
    os << p;
    return os.str();
  };
  std::vector<const JointRecord*> sorted;
  for (const auto& j : engine) sorted.push_back(&j);
  std::sort(sorted.begin(), sorted.end(),
            [](const JointRecord* a, const JointRecord* b) { return a->location < b->location; });
  std::size_t i = 0, k = 0;
  while (i < sorted.size() || k < reference.size()) {
    if (k == reference.size() || (i < sorted.size() && sorted[i]->location < reference[k].location)) {
      issues.push_back("engine-only joint at " + where(sorted[i]->location));
      ++i;
    } else if (i == sorted.size() || reference[k].location < sorted[i]->location) {
      issues.push_back("oracle-only joint at " + where(reference[k].location));
      ++k;
    } else {
      const auto& e = *sorted[i];
      const auto& r = reference[k];
      if (e.multiplicity != r.multiplicity) {
        issues.push_back("multiplicity at " + where(e.location) + ": engine " +
                         std::to_string(e.multiplicity) + ", oracle " + std::to_string(r.multiplicity));
      }
      if (e.incident_line_ids != r.lines) {
        issues.push_back("incident lines differ at " + where(e.location));
      }
      if (e.k_count != r.lines.size()) {
        issues.push_back("k_count at " + where(e.location) + ": engine " + std::to_string(e.k_count) +
                         ", oracle " + std::to_string(r.lines.size()));
      }
      ++i;
      ++k;
    }
  }
  return issues;
}

}  // namespace joints::oracle
