#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/real.hpp"

namespace joints {

/// A deduplicated collection of lines with unique ids.
class LineConfig {
 public:
  LineConfig() = default;

  /// Collapses geometric duplicates (first occurrence wins, a warning is
  /// recorded) and throws InvalidArgument if two distinct lines share an id.
  static LineConfig from_lines(std::vector<Line3> lines, std::string provenance = {});

  /// Lines with ids 0..n-1 assigned in order before deduplication.
  static LineConfig from_lines_renumbered(std::vector<Line3> lines, std::string provenance = {});

  const std::vector<Line3>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  const std::string& provenance() const { return provenance_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<Line3> lines_;
  std::string provenance_;
  std::vector<std::string> warnings_;
};

struct JointRecord {
  Point3 location;
  std::vector<LineId> incident_line_ids;  // sorted
  std::size_t k_count = 0;
  std::uint64_t multiplicity = 0;
};

inline constexpr std::size_t kMaxConcurrentLines = 10'000;

/// Every point where at least two lines meet, with the (sorted) indices of
/// all lines through it. Built from pairwise intersections, keyed by exact
/// coordinates.
std::map<Point3, std::vector<std::size_t>> concurrency_points(std::span<const Line3> lines);

/// Number of unordered 3-subsets of `dirs` whose determinant is nonzero.
/// `dirs` are the directions of distinct lines through one point. Throws
/// ResourceLimit above kMaxConcurrentLines.
std::uint64_t multiplicity(std::span<const Direction3> dirs);

/// The joint set, sorted by location.
std::vector<JointRecord> detect_joints(const LineConfig& config);

struct DyadicKey {
  int lambda = 0;  // 2^lambda <= N(x) < 2^(lambda+1)
  int mu = 0;      // 2^mu <= k_count < 2^(mu+1)
  friend auto operator<=>(const DyadicKey&, const DyadicKey&) = default;
};

struct DyadicStats {
  std::map<DyadicKey, std::vector<JointRecord>> buckets;

  std::size_t total() const;
};

DyadicStats dyadic_stats(std::span<const JointRecord> joints);

/// floor(log2(n)) for n >= 1.
int dyadic_exponent(std::uint64_t n);

struct BoundReport {
  std::size_t lines = 0;
  std::size_t joint_count = 0;
  Real weighted_sum;  // sum over joints of sqrt(N(x))
  Real rhs;           // L^{3/2}
  Real ratio;
};

/// Throws EmptyConfig when the configuration has no lines.
BoundReport bound_report(const LineConfig& config);
BoundReport bound_report(const LineConfig& config, std::span<const JointRecord> joints);

struct DyadicClassReport {
  std::size_t class_size = 0;  // |J_N^k|
  Real lhs;                    // |J_N^k| sqrt(N)
  Real term1;                  // L^{3/2} / sqrt(k)
  Real term2;                  // (L / k) sqrt(N)
};

/// Joints with N <= N(x) < 2N lying on k <= k_count < 2k lines, compared with
/// the two terms of the dyadic class bound. Requires N >= 1, k >= 3.
DyadicClassReport proposition12_report(const LineConfig& config, std::uint64_t N,
                                       std::uint64_t k);
DyadicClassReport proposition12_report(const LineConfig& config,
                                       std::span<const JointRecord> joints, std::uint64_t N,
                                       std::uint64_t k);

struct Lemma31Result {
  bool holds = false;
  std::size_t lhs_lines = 0;  // lines outside the subset through x
  Scalar rhs;                 // N / (1000 k^2)
  std::uint64_t multiplicity = 0;
  std::uint64_t subset_multiplicity = 0;
};

/// Checks the multiplicity-drop lemma at x: if x is a joint of multiplicity N
/// on at most 2k lines and the subcollection `subset` gives x multiplicity at
/// most N/2 (or none), then at least N/(1000 k^2) lines outside the subset pass
/// through x. Throws HypothesisViolated when the premises fail.
Lemma31Result check_lemma31(const LineConfig& config, const std::set<LineId>& subset,
                            const Point3& x, std::uint64_t k);

struct Lemma32Result {
  bool holds = false;
  std::size_t off_plane_lines = 0;
  Scalar rhs;  // N / (1000 k^2)
  std::uint64_t multiplicity = 0;
};

/// For the plane through x with the given normal, counts lines through x not
/// contained in it. Throws HypothesisViolated unless x is a joint on at most
/// 2k lines.
Lemma32Result check_lemma32(const LineConfig& config, const Point3& x,
                            const Direction3& plane_normal, std::uint64_t k);

}  // namespace joints
