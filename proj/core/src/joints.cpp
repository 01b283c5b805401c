#include "joints/joints.hpp"

#include <algorithm>
#include <bit>

#include "joints/error.hpp"

namespace joints {

LineConfig LineConfig::from_lines(std::vector<Line3> lines, std::string provenance) {
  LineConfig cfg;
  cfg.provenance_ = std::move(provenance);
  auto less = [](const Line3& a, const Line3& b) { return geometry_less(a, b); };
  std::map<Line3, LineId, decltype(less)> seen(less);
  std::set<LineId> ids;
  for (auto& line : lines) {
    auto [it, inserted] = seen.emplace(line, line.id);
    if (!inserted) {
      cfg.warnings_.push_back("duplicate line #" + std::to_string(line.id.value) +
                              " collapsed into #" + std::to_string(it->second.value));
      continue;
    }
    if (!ids.insert(line.id).second) {
      throw InvalidArgument("line id " + std::to_string(line.id.value) + " is not unique");
    }
    cfg.lines_.push_back(std::move(line));
  }
  return cfg;
}

LineConfig LineConfig::from_lines_renumbered(std::vector<Line3> lines, std::string provenance) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    lines[i].id = LineId{static_cast<std::uint32_t>(i)};
  }
  return from_lines(std::move(lines), std::move(provenance));
}

std::map<Point3, std::vector<std::size_t>> concurrency_points(std::span<const Line3> lines) {
  std::map<Point3, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto hit = line_intersection(lines[i], lines[j]);
      if (hit.kind != LineIntersection::Kind::point) continue;
      auto& members = groups[*hit.point];
      members.push_back(i);
      members.push_back(j);
    }
  }
  for (auto& [point, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  return groups;
}

std::uint64_t multiplicity(std::span<const Direction3> dirs) {
  if (dirs.size() > kMaxConcurrentLines) {
    throw ResourceLimit(std::to_string(dirs.size()) + " concurrent lines exceeds the limit of " +
                        std::to_string(kMaxConcurrentLines));
  }
  std::uint64_t count = 0;
  Integer cx, cy, cz, det;
  for (std::size_t a = 0; a < dirs.size(); ++a) {
    for (std::size_t b = a + 1; b < dirs.size(); ++b) {
      const auto& u = dirs[a];
      const auto& v = dirs[b];
      cx = u[1] * v[2] - u[2] * v[1];
      cy = u[2] * v[0] - u[0] * v[2];
      cz = u[0] * v[1] - u[1] * v[0];
      for (std::size_t c = b + 1; c < dirs.size(); ++c) {
        const auto& w = dirs[c];
        det = cx * w[0] + cy * w[1] + cz * w[2];
        if (sgn(det) != 0) ++count;
      }
    }
  }
  return count;
}

std::vector<JointRecord> detect_joints(const LineConfig& config) {
  const auto& lines = config.lines();
  std::vector<JointRecord> joints;
  std::vector<Direction3> dirs;
  for (auto& [point, members] : concurrency_points(lines)) {
    if (members.size() < 3) continue;
    dirs.clear();
    for (auto i : members) dirs.push_back(lines[i].dir);
    const auto n = multiplicity(dirs);
    if (n == 0) continue;
    JointRecord rec;
    rec.location = point;
    for (auto i : members) rec.incident_line_ids.push_back(lines[i].id);
    std::sort(rec.incident_line_ids.begin(), rec.incident_line_ids.end());
    rec.k_count = members.size();
    rec.multiplicity = n;
    joints.push_back(std::move(rec));
  }
  return joints;
}

int dyadic_exponent(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("dyadic exponent of zero");
  return static_cast<int>(std::bit_width(n)) - 1;
}

std::size_t DyadicStats::total() const {
  std::size_t n = 0;
  for (const auto& [key, members] : buckets) n += members.size();
  return n;
}

DyadicStats dyadic_stats(std::span<const JointRecord> joints) {
  DyadicStats stats;
  for (const auto& j : joints) {
    DyadicKey key{dyadic_exponent(j.multiplicity), dyadic_exponent(j.k_count)};
    stats.buckets[key].push_back(j);
  }
  return stats;
}

BoundReport bound_report(const LineConfig& config) {
  if (config.empty()) throw EmptyConfig("bound report needs at least one line");
  const auto joints = detect_joints(config);
  return bound_report(config, joints);
}

BoundReport bound_report(const LineConfig& config, std::span<const JointRecord> joints) {
  if (config.empty()) throw EmptyConfig("bound report needs at least one line");
  BoundReport r;
  r.lines = config.size();
  r.joint_count = joints.size();
  r.weighted_sum = 0;
  for (const auto& j : joints) r.weighted_sum += real_sqrt(j.multiplicity);
  r.rhs = pow_three_halves(r.lines);
  r.ratio = r.weighted_sum / r.rhs;
  return r;
}

DyadicClassReport proposition12_report(const LineConfig& config, std::uint64_t N,
                                       std::uint64_t k) {
  const auto joints = detect_joints(config);
  return proposition12_report(config, joints, N, k);
}

DyadicClassReport proposition12_report(const LineConfig& config,
                                       std::span<const JointRecord> joints, std::uint64_t N,
                                       std::uint64_t k) {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (k < 3) throw InvalidArgument("k must be at least 3");
  DyadicClassReport r;
  for (const auto& j : joints) {
    if (j.multiplicity >= N && j.multiplicity < 2 * N && j.k_count >= k && j.k_count < 2 * k) {
      ++r.class_size;
    }
  }
  const Real rootN = real_sqrt(N);
  const Real L(config.size());
  r.lhs = Real(r.class_size) * rootN;
  r.term1 = pow_three_halves(config.size()) / real_sqrt(k);
  r.term2 = L / Real(k) * rootN;
  return r;
}

namespace {

struct LinesThrough {
  std::vector<std::size_t> indices;
  std::vector<Direction3> dirs;
};

LinesThrough lines_through(const LineConfig& config, const Point3& x) {
  LinesThrough out;
  const auto& lines = config.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (contains(lines[i], x)) {
      out.indices.push_back(i);
      out.dirs.push_back(lines[i].dir);
    }
  }
  return out;
}

// Shared premise of both lemmas: x is a joint lying on at most 2k lines.
std::uint64_t joint_premise(const LinesThrough& through, std::uint64_t k) {
  if (k < 1) throw HypothesisViolated("k must be positive");
  if (through.indices.size() > 2 * k) {
    throw HypothesisViolated("x lies on " + std::to_string(through.indices.size()) +
                             " lines, more than 2k = " + std::to_string(2 * k));
  }
  const auto n = multiplicity(through.dirs);
  if (n == 0) throw HypothesisViolated("x is not a joint of the configuration");
  return n;
}

Scalar lemma_rhs(std::uint64_t N, std::uint64_t k) {
  Scalar r(Integer(std::to_string(N)), Integer(std::to_string(1000 * k * k)));
  r.canonicalize();
  return r;
}

}  // namespace

Lemma31Result check_lemma31(const LineConfig& config, const std::set<LineId>& subset,
                            const Point3& x, std::uint64_t k) {
  const auto& lines = config.lines();
  std::set<LineId> known;
  for (const auto& l : lines) known.insert(l.id);
  for (const auto& id : subset) {
    if (!known.contains(id)) {
      throw HypothesisViolated("subset id " + std::to_string(id.value) + " not in config");
    }
  }

  const auto through = lines_through(config, x);
  Lemma31Result r;
  r.multiplicity = joint_premise(through, k);

  std::vector<Direction3> inside;
  for (auto i : through.indices) {
    if (subset.contains(lines[i].id)) {
      inside.push_back(lines[i].dir);
    } else {
      ++r.lhs_lines;
    }
  }
  r.subset_multiplicity = multiplicity(inside);
  if (2 * r.subset_multiplicity > r.multiplicity) {
    throw HypothesisViolated("subset multiplicity " + std::to_string(r.subset_multiplicity) +
                             " exceeds N/2 for N = " + std::to_string(r.multiplicity));
  }
  r.rhs = lemma_rhs(r.multiplicity, k);
  r.holds = Scalar(static_cast<unsigned long>(r.lhs_lines)) >= r.rhs;
  return r;
}

Lemma32Result check_lemma32(const LineConfig& config, const Point3& x,
                            const Direction3& plane_normal, std::uint64_t k) {
  const auto through = lines_through(config, x);
  Lemma32Result r;
  r.multiplicity = joint_premise(through, k);
  for (const auto& d : through.dirs) {
    Integer dot = d[0] * plane_normal[0] + d[1] * plane_normal[1] + d[2] * plane_normal[2];
    if (sgn(dot) != 0) ++r.off_plane_lines;
  }
  r.rhs = lemma_rhs(r.multiplicity, k);
  r.holds = Scalar(static_cast<unsigned long>(r.off_plane_lines)) >= r.rhs;
  return r;
}

}  // namespace joints
