#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/joints.hpp"

namespace joints::oracle {

/// Brute-force reference for joint detection. Shares no code with the engine
/// beyond the geometry value types: intersections come from a direct 2x2
/// solve, incidence from a cross product, multiplicity from a rational 3x3
/// determinant over every triple.
struct OracleJoint {
  Point3 location;
  std::vector<LineId> lines;  // sorted
  std::uint64_t multiplicity = 0;
};

std::vector<OracleJoint> brute_force_joints(std::span<const Line3> lines);

/// Human-readable discrepancies between the engine's joints and the oracle.
/// Empty when they agree exactly.
std::vector<std::string> compare(std::span<const JointRecord> engine,
                                 std::span<const OracleJoint> reference);

}  // namespace joints::oracle
