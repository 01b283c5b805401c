#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/poly.hpp"
#include "joints/real.hpp"

namespace joints {

struct CurveId {
  std::uint32_t value = 0;
  friend auto operator<=>(const CurveId&, const CurveId&) = default;
};

/// t -> (px(t), py(t), pz(t)) with rational coefficients.
class ParamCurve {
 public:
  /// Throws InvalidArgument when all coordinates are constant or a
  /// coordinate exceeds the degree bound.
  ParamCurve(std::array<UniPoly, 3> coords, unsigned degree_bound, CurveId id = {});

  /// base + t * dir, degree bound 1.
  static ParamCurve from_line(const Line3& line, CurveId id = {});

  const std::array<UniPoly, 3>& coords() const { return coords_; }
  const UniPoly& coord(int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
  unsigned degree_bound() const { return degree_bound_; }
  int degree() const;
  CurveId id() const { return id_; }

  Point3 at(const Scalar& t) const;
  /// Curve with t replaced by a*t + c. a must be nonzero.
  ParamCurve reparametrized(const Scalar& a, const Scalar& c) const;

 private:
  std::array<UniPoly, 3> coords_;
  unsigned degree_bound_;
  CurveId id_;
};

/// Throws VanishingDerivative when the derivative vector is zero at t.
Direction3 tangent_direction(const ParamCurve& curve, const Scalar& t);

struct ParameterPairs {
  std::vector<std::pair<Scalar, Scalar>> pairs;  // sorted
  bool complete = true;  // false when irrational parameters could not be ruled out
};

/// Rational (t, s) with gamma(t) = delta(s). Throws DegenerateElimination when
/// the system cannot be reduced to finitely many candidates (e.g. the images
/// overlap along a whole arc).
ParameterPairs curve_pair_intersections(const ParamCurve& gamma, const ParamCurve& delta);

/// Rational (t, s), t > s, with gamma(t) = gamma(s). An image traced twice
/// yields an empty, incomplete result.
ParameterPairs curve_self_crossings(const ParamCurve& gamma);

struct TangentSet {
  Point3 location;
  std::vector<Direction3> directions;                // sorted, deduplicated
  std::vector<std::pair<CurveId, Scalar>> contributing;  // sorted
};

struct CurveJointRecord {
  Point3 location;
  TangentSet tangent_set;
  std::uint64_t multiplicity = 0;
};

struct CurveJoints {
  std::vector<CurveJointRecord> joints;  // sorted by location
  bool complete = true;
  std::size_t flagged_pairs = 0;  // pairs and self-checks that were incomplete
};

CurveJoints detect_curve_joints(std::span<const ParamCurve> curves);

struct CurveBoundReport {
  std::size_t curves = 0;
  std::size_t joint_count = 0;
  Real weighted_sum;
  Real rhs;
  Real ratio;
  bool complete = true;
  std::size_t flagged_pairs = 0;
};

/// Throws EmptyConfig for an empty family.
CurveBoundReport curve_bound_report(std::span<const ParamCurve> curves);
CurveBoundReport curve_bound_report(std::span<const ParamCurve> curves, const CurveJoints& joints);

}  // namespace joints
