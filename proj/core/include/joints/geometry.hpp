#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace joints {

using Integer = mpz_class;
using Scalar = mpq_class;  // canonical (reduced, positive denominator) after every op

/// Parses "n", "-n" or "n/d". Throws ParseError on malformed input or d == 0.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& value);

struct Point3 {
  Scalar x, y, z;

  Point3() = default;
  Point3(Scalar x_, Scalar y_, Scalar z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  const Scalar& operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  Scalar& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  // Lexicographic; used as the grouping key for exact coincidence.
  friend bool operator<(const Point3& a, const Point3& b);
};

std::ostream& operator<<(std::ostream& os, const Point3& p);

/// A projective direction: primitive integer vector whose first nonzero
/// component is positive, so d and -d have the same representation.
class Direction3 {
 public:
  /// Throws ZeroDirection for the zero vector.
  static Direction3 from_integers(Integer dx, Integer dy, Integer dz);
  /// Clears denominators, then canonicalizes.
  static Direction3 from_rationals(const Scalar& dx, const Scalar& dy, const Scalar& dz);

  const Integer& operator[](int axis) const { return c_[static_cast<std::size_t>(axis)]; }
  const std::array<Integer, 3>& components() const { return c_; }
  int leading_axis() const;

  friend bool operator==(const Direction3& a, const Direction3& b) { return a.c_ == b.c_; }
  friend bool operator<(const Direction3& a, const Direction3& b);

 private:
  Direction3() = default;
  std::array<Integer, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const Direction3& d);

struct LineId {
  std::uint32_t value = 0;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

/// A line in canonical base-point form: the base is the point of the line
/// whose coordinate on dir.leading_axis() is zero. Two descriptions of the same
/// geometric line therefore have equal (base, dir).
struct Line3 {
  Point3 base;
  Direction3 dir;
  LineId id;

  /// Geometric equality; ids are labels and do not participate.
  friend bool operator==(const Line3& a, const Line3& b) {
    return a.dir == b.dir && a.base == b.base;
  }
};

bool geometry_less(const Line3& a, const Line3& b);
std::ostream& operator<<(std::ostream& os, const Line3& l);

/// Throws ZeroDirection when the raw direction is all-zero.
Line3 canonicalize_line(const Point3& point, const Direction3& dir, LineId id = {});
Line3 canonicalize_line(const Point3& point, const std::array<Scalar, 3>& raw_dir,
                        LineId id = {});

/// Line through two distinct points. Throws ZeroDirection if they coincide.
Line3 line_through(const Point3& a, const Point3& b, LineId id = {});

bool contains(const Line3& line, const Point3& p);

struct LineIntersection {
  enum class Kind { point, parallel, skew, identical };
  Kind kind;
  std::optional<Point3> point;  // set iff kind == point
};

LineIntersection line_intersection(const Line3& l1, const Line3& l2);

/// 3x3 integer determinant of the three directions.
Integer triple_determinant(const Direction3& d1, const Direction3& d2, const Direction3& d3);
bool triple_spans(const Direction3& d1, const Direction3& d2, const Direction3& d3);

// ---------------------------------------------------------------------------
// Planar images of projections.

struct Point2 {
  Scalar x, y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b);
};

/// Planar line, canonical in the same sense as Line3: primitive integer
/// direction with positive leading component, base zero on the leading axis.
struct Line2 {
  Point2 base;
  std::array<Integer, 2> dir;
  LineId id;

  friend bool operator==(const Line2& a, const Line2& b) {
    return a.dir == b.dir && a.base == b.base;
  }
};

bool geometry_less(const Line2& a, const Line2& b);

/// Throws ZeroDirection for a zero direction.
Line2 canonicalize_line(const Point2& point, const std::array<Scalar, 2>& raw_dir,
                        LineId id = {});
bool contains(const Line2& line, const Point2& p);

}  // namespace joints
