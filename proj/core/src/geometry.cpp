#include "joints/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "joints/error.hpp"

namespace joints {

Scalar parse_scalar(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + text + "'");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

bool operator<(const Point3& a, const Point3& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0;
  if (int c = cmp(a.y, b.y); c != 0) return c < 0;
  return cmp(a.z, b.z) < 0;
}

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
}

Direction3 Direction3::from_integers(Integer dx, Integer dy, Integer dz) {
  if (dx == 0 && dy == 0 && dz == 0) throw ZeroDirection("direction vector is zero");
  Integer g;
  mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dz.get_mpz_t());
  Direction3 d;
  d.c_ = {Integer(dx / g), Integer(dy / g), Integer(dz / g)};
  if (d.c_[static_cast<std::size_t>(d.leading_axis())] < 0) {
    for (auto& c : d.c_) c = -c;
  }
  return d;
}

Direction3 Direction3::from_rationals(const Scalar& dx, const Scalar& dy, const Scalar& dz) {
  Integer l = 1;
  for (const Scalar* c : {&dx, &dy, &dz}) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->get_den_mpz_t());
  }
  return from_integers(Integer(dx * l), Integer(dy * l), Integer(dz * l));
}

int Direction3::leading_axis() const {
  for (int i = 0; i < 3; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

bool operator<(const Direction3& a, const Direction3& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (int c = cmp(a.c_[i], b.c_[i]); c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Direction3& d) {
  return os << '<' << d[0] << ", " << d[1] << ", " << d[2] << '>';
}

bool geometry_less(const Line3& a, const Line3& b) {
  if (a.dir == b.dir) return a.base < b.base;
  return a.dir < b.dir;
}

std::ostream& operator<<(std::ostream& os, const Line3& l) {
  return os << "line#" << l.id.value << '{' << l.base << " + t" << l.dir << '}';
}

Line3 canonicalize_line(const Point3& point, const Direction3& dir, LineId id) {
  const int axis = dir.leading_axis();
  const Scalar t = -point[axis] / Scalar(dir[axis]);
  Point3 base(point.x + t * dir[0], point.y + t * dir[1], point.z + t * dir[2]);
  return Line3{std::move(base), dir, id};
}

Line3 canonicalize_line(const Point3& point, const std::array<Scalar, 3>& raw_dir, LineId id) {
  return canonicalize_line(point, Direction3::from_rationals(raw_dir[0], raw_dir[1], raw_dir[2]),
                           id);
}

Line3 line_through(const Point3& a, const Point3& b, LineId id) {
  return canonicalize_line(a, {Scalar(b.x - a.x), Scalar(b.y - a.y), Scalar(b.z - a.z)}, id);
}

namespace {

struct Vec3 {
  Scalar x, y, z;
};

Vec3 sub(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 as_vec(const Direction3& d) { return {Scalar(d[0]), Scalar(d[1]), Scalar(d[2])}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

}  // namespace

bool contains(const Line3& line, const Point3& p) {
  return is_zero(cross(sub(p, line.base), as_vec(line.dir)));
}

LineIntersection line_intersection(const Line3& l1, const Line3& l2) {
  using Kind = LineIntersection::Kind;
  if (l1.dir == l2.dir) {
    return {l1.base == l2.base ? Kind::identical : Kind::parallel, std::nullopt};
  }
  const Vec3 d1 = as_vec(l1.dir);
  const Vec3 d2 = as_vec(l2.dir);
  const Vec3 n = cross(d1, d2);
  const Vec3 w = sub(l2.base, l1.base);
  if (dot(w, n) != 0) return {Kind::skew, std::nullopt};
  // base1 + t d1 = base2 + s d2  =>  t (d1 x d2) = (w x d2)
  const Scalar t = dot(cross(w, d2), n) / dot(n, n);
  return {Kind::point, Point3(l1.base.x + t * d1.x, l1.base.y + t * d1.y, l1.base.z + t * d1.z)};
}

Integer triple_determinant(const Direction3& a, const Direction3& b, const Direction3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool triple_spans(const Direction3& d1, const Direction3& d2, const Direction3& d3) {
  return sgn(triple_determinant(d1, d2, d3)) != 0;
}

bool operator<(const Point2& a, const Point2& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

bool geometry_less(const Line2& a, const Line2& b) {
  if (a.dir != b.dir) {
    if (int c = cmp(a.dir[0], b.dir[0]); c != 0) return c < 0;
    return cmp(a.dir[1], b.dir[1]) < 0;
  }
  return a.base < b.base;
}

Line2 canonicalize_line(const Point2& point, const std::array<Scalar, 2>& raw_dir, LineId id) {
  if (raw_dir[0] == 0 && raw_dir[1] == 0) throw ZeroDirection("planar direction is zero");
  Integer l = 1;
  for (const auto& c : raw_dir) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::array<Integer, 2> d{Integer(raw_dir[0] * l), Integer(raw_dir[1] * l)};
  Integer g;
  mpz_gcd(g.get_mpz_t(), d[0].get_mpz_t(), d[1].get_mpz_t());
  d[0] /= g;
  d[1] /= g;
  const std::size_t axis = d[0] != 0 ? 0 : 1;
  if (d[axis] < 0) {
    d[0] = -d[0];
    d[1] = -d[1];
  }
  const Scalar coord = axis == 0 ? point.x : point.y;
  const Scalar t = -coord / Scalar(d[axis]);
  return Line2{Point2{point.x + t * d[0], point.y + t * d[1]}, d, id};
}

bool contains(const Line2& line, const Point2& p) {
  return (p.x - line.base.x) * line.dir[1] - (p.y - line.base.y) * line.dir[0] == 0;
}

}  // namespace joints
