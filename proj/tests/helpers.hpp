#pragma once

#include <array>
#include <random>
#include <vector>

#include "joints/curves.hpp"
#include "joints/geometry.hpp"
#include "joints/joints.hpp"

namespace joints::testing {

inline Point3 P(long x, long y, long z) { return Point3(Scalar(x), Scalar(y), Scalar(z)); }
inline Direction3 D(long x, long y, long z) { return Direction3::from_integers(x, y, z); }

inline Line3 L(Point3 base, Direction3 dir, std::uint32_t id = 0) {
  return canonicalize_line(base, dir, LineId{id});
}

inline std::vector<Line3> axes() {
  return {L(P(0, 0, 0), D(1, 0, 0), 0), L(P(0, 0, 0), D(0, 1, 0), 1), L(P(0, 0, 0), D(0, 0, 1), 2)};
}

/// Reduced rational num/den (mpq_class does not reduce on construction).
inline Scalar Q(long num, long den) {
  Scalar q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline UniPoly U(std::vector<long> ascending) {
  std::vector<Scalar> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

/// x -> A x + b with A invertible.
struct Affine {
  std::array<std::array<Scalar, 3>, 3> A;
  std::array<Scalar, 3> b;

  Point3 operator()(const Point3& p) const {
    Point3 out;
    for (int i = 0; i < 3; ++i) {
      const auto& r = A[static_cast<std::size_t>(i)];
      out[i] = r[0] * p.x + r[1] * p.y + r[2] * p.z + b[static_cast<std::size_t>(i)];
    }
    return out;
  }

  std::array<Scalar, 3> linear(const std::array<Scalar, 3>& v) const {
    std::array<Scalar, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = A[i][0] * v[0] + A[i][1] * v[1] + A[i][2] * v[2];
    return out;
  }

  Line3 operator()(const Line3& l) const {
    const std::array<Scalar, 3> d{Scalar(l.dir[0]), Scalar(l.dir[1]), Scalar(l.dir[2])};
    return canonicalize_line((*this)(l.base), linear(d), l.id);
  }

  ParamCurve operator()(const ParamCurve& c) const {
    std::array<UniPoly, 3> coords;
    for (std::size_t i = 0; i < 3; ++i) {
      UniPoly acc = UniPoly::constant(b[i]);
      for (std::size_t j = 0; j < 3; ++j) acc += c.coords()[j] * A[i][j];
      coords[i] = acc;
    }
    return ParamCurve(std::move(coords), c.degree_bound(), c.id());
  }
};

/// Random invertible map with small rational entries.
inline Affine random_affine(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  while (true) {
    Affine f;
    for (auto& row : f.A) {
      for (auto& e : row) e = Q(num(rng), den(rng));
    }
    for (auto& e : f.b) e = Q(num(rng), den(rng));
    const auto& a = f.A;
    const Scalar det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (det != 0) return f;
  }
}

/// Lines through pairs of points of the lattice {0..side-1}^3: dense in joints.
inline std::vector<Line3> lattice_lines(std::mt19937_64& rng, std::size_t count, long side) {
  std::uniform_int_distribution<long> c(0, side - 1);
  std::vector<Line3> out;
  while (out.size() < count) {
    const Point3 a = P(c(rng), c(rng), c(rng));
    const Point3 b = P(c(rng), c(rng), c(rng));
    if (a == b) continue;
    Line3 l = line_through(a, b, LineId{static_cast<std::uint32_t>(out.size())});
    bool dup = false;
    for (const auto& o : out) dup = dup || o == l;
    if (!dup) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace joints::testing
