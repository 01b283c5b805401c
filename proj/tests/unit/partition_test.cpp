#include "doctest.h"
#include "helpers.hpp"
#include "joints/error.hpp"
#include "joints/generators.hpp"
#include "joints/partition.hpp"

using namespace joints;
using namespace joints::testing;

namespace {

const MultiPoly X = MultiPoly::variable(0);
const MultiPoly Y = MultiPoly::variable(1);
const MultiPoly Z = MultiPoly::variable(2);
MultiPoly C(long c) { return MultiPoly::constant(Scalar(c)); }

PointSet cube_vertices() {
  PointSet s;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) s.points.push_back(P(x, y, z));
  return s;
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

}  // namespace

TEST_CASE("veronese_lift examples") {
  CHECK(veronese_lift(P(1, 0, 0), 1) == std::vector<Scalar>{1, 0, 0});
  CHECK(veronese_lift(P(2, 1, 0), 2) == std::vector<Scalar>{2, 1, 0, 4, 2, 0, 1, 0, 0});
  for (unsigned d = 1; d <= 4; ++d) {
    const auto z = veronese_lift(P(0, 0, 0), d);
    CHECK(z.size() == veronese_dimension(d));
    for (const auto& v : z) CHECK(v == 0);
  }
  CHECK(veronese_dimension(1) == 3);
  CHECK(veronese_dimension(2) == 9);
  CHECK(veronese_dimension(3) == 19);
  CHECK_THROWS_AS(veronese_lift(P(1, 1, 1), 0), InvalidArgument);
}

TEST_CASE("lift turns polynomials into linear functionals") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> c(-5, 5);
  const unsigned d = 3;
  const auto mons = veronese_monomials(d);
  for (int i = 0; i < 20; ++i) {
    std::map<MultiPoly::Monomial, Scalar> terms;
    std::vector<Scalar> w;
    for (const auto& m : mons) {
      w.emplace_back(c(rng));
      terms[m] = w.back();
    }
    const auto p = MultiPoly::from_terms(terms);
    const auto pt = P(c(rng), c(rng), c(rng));
    const auto lift = veronese_lift(pt, d);
    Scalar dot = 0;
    for (std::size_t k = 0; k < w.size(); ++k) dot += w[k] * lift[k];
    CHECK(dot == p.evaluate(pt));
  }
}

TEST_CASE("discrete_ham_sandwich examples") {
  std::vector<PointSet> singles(3);
  singles[0].points = {P(-1, 0, 0)};
  singles[1].points = {P(1, 0, 0)};
  singles[2].points = {P(0, 1, 0)};
  auto a = discrete_ham_sandwich(singles, 1, 1);
  CHECK(a.converged);
  CHECK(a.poly.degree() <= 1);
  CHECK_FALSE(a.poly.is_zero());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.per_set_counts[i].total() == 1);
    CHECK(a.per_set_counts[i].bisected());
  }

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-100, 100);
  std::vector<PointSet> one(1);
  while (one[0].points.size() < 40) one[0].points.push_back(P(c(rng), c(rng), c(rng)));
  auto b = discrete_ham_sandwich(one, 1, 5);
  CHECK(b.converged);
  const auto counts = side_counts(b.poly, one[0].points);
  CHECK(counts.positive <= 20);
  CHECK(counts.negative <= 20);
  CHECK(counts.positive == b.per_set_counts[0].positive);

  std::vector<PointSet> empties(3);
  auto e = discrete_ham_sandwich(empties, 1, 1);
  CHECK(e.converged);
  CHECK_FALSE(e.poly.is_zero());
}

TEST_CASE("ham sandwich rejects more sets than the lifted dimension") {
  std::vector<PointSet> four(4);
  CHECK_THROWS_AS(discrete_ham_sandwich(four, 1, 1), TooManySets);
  std::vector<PointSet> nine(9);
  CHECK_NOTHROW(discrete_ham_sandwich(nine, 2, 1));
}

TEST_CASE("ham sandwich bisects several sets with a quadric") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PointSet> sets(6);
    for (auto& s : sets) {
      const std::size_t n = 5 + rng() % 30;
      std::set<Point3> seen;
      while (s.points.size() < n) {
        auto p = P(c(rng), c(rng), c(rng));
        if (seen.insert(p).second) s.points.push_back(p);
      }
    }
    auto step = discrete_ham_sandwich(sets, 2, rng());
    CHECK(step.converged);
    CHECK(step.poly.degree() <= 2);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto cnt = side_counts(step.poly, sets[i].points);
      CHECK(cnt.positive <= ceil_half(sets[i].points.size()));
      CHECK(cnt.negative <= ceil_half(sets[i].points.size()));
    }
  }
}

TEST_CASE("step degree schedule") {
  CHECK_THROWS_AS(guth_katz_partition(cube_vertices(), 1.0, 1), InvalidArgument);
  CHECK(step_degree_schedule(1.5) == std::vector<unsigned>{1});
  CHECK(step_degree_schedule(2.1) == std::vector<unsigned>{1});
  CHECK(step_degree_schedule(3) == std::vector<unsigned>{1, 2});
  CHECK(step_degree_schedule(4) == std::vector<unsigned>{1, 2});
  CHECK(step_degree_schedule(5) == std::vector<unsigned>{1, 2, 2});
  CHECK(step_degree_schedule(7) == std::vector<unsigned>{1, 2, 2, 2});
  // Every step can host its 2^(j-1) sets and the cell count stays below d^3.
  for (double d : {2.0, 3.0, 5.5, 10.0, 25.0, 40.0}) {
    const auto s = step_degree_schedule(d);
    unsigned sum = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(veronese_dimension(s[j]) >= (std::size_t{1} << j));
      sum += s[j];
    }
    CHECK(sum <= d);
    CHECK(static_cast<double>(std::uint64_t{1} << s.size()) <= d * d * d);
  }
}

TEST_CASE("guth_katz_partition examples") {
  auto cube = cube_vertices();
  auto a = guth_katz_partition(cube, 2.1, 3);
  CHECK(a.J == 1);
  CHECK(a.audit.nonempty_cells <= 2);
  CHECK(a.steps[0].converged);
  const auto cnt = side_counts(a.steps[0].poly, cube.points);
  CHECK(cnt.positive <= 4);
  CHECK(cnt.negative <= 4);
  CHECK(verify_partition(cube, a).empty());

  PointSet single;
  single.points = {P(3, 1, 4)};
  auto b = guth_katz_partition(single, 2, 1);
  CHECK(b.audit.max_cell_count <= 1);
  CHECK(b.audit.nonempty_cells + b.audit.z_bucket_count == 1);

  auto pts = random_points(512, 9);
  auto c = guth_katz_partition(pts, 4, 9);
  CHECK(c.audit.target_cells <= 64);
  CHECK(c.audit.nonempty_cells <= c.audit.target_cells);
  if (c.audit.all_converged) CHECK(c.audit.max_cell_count <= (512 + c.audit.target_cells - 1) / c.audit.target_cells);
  CHECK(verify_partition(pts, c).empty());
}

TEST_CASE("partition errors") {
  CHECK_THROWS_AS(guth_katz_partition(PointSet{}, 4, 1), InvalidArgument);
  PointSet dup;
  dup.points = {P(1, 1, 1), P(1, 1, 1)};
  CHECK_THROWS_AS(guth_katz_partition(dup, 4, 1), InvalidArgument);
  dup.duplicates_flagged = true;
  CHECK_NOTHROW(guth_katz_partition(dup, 4, 1));
}

TEST_CASE("assignments: exact signs, ZBucket, determinism") {
  auto pts = random_points(200, 4, 20);
  auto part = guth_katz_partition(pts, 3, 4);
  const auto again = guth_katz_partition(pts, 3, 4);
  CHECK(part.assignments == again.assignments);
  CHECK(assign_cells(pts, part) == part.assignments);

  // A point on the first step's zero set lands in ZBucket.
  const auto& p1 = part.steps[0].poly;
  const Scalar a = p1.terms().count({1, 0, 0}) ? p1.terms().at({1, 0, 0}) : Scalar(0);
  if (a != 0) {
    Point3 q = P(0, 7, -3);
    q.x = -p1.evaluate(q) / a;
    PointSet extra;
    extra.points = {q};
    auto as = assign_cells(extra, part);
    CHECK(std::holds_alternative<ZBucket>(as[0]));
  }

  std::size_t in_cells = 0, in_z = 0;
  for (const auto& as : part.assignments) {
    if (std::holds_alternative<ZBucket>(as)) {
      ++in_z;
    } else {
      ++in_cells;
      CHECK(std::get<SignVector>(as).signs.size() == part.J);
    }
  }
  CHECK(in_cells + in_z == pts.points.size());
  CHECK(in_z == part.audit.z_bucket_count);
}

TEST_CASE("sign vectors read (+,-)") {
  SignVector s{{1, -1}};
  CHECK(s.to_string() == "+-");
}

TEST_CASE("degree ledger") {
  auto pts = random_points(300, 2);
  for (double d : {2.0, 3.0, 4.0, 5.0}) {
    auto part = guth_katz_partition(pts, d, 2);
    int sum = 0;
    for (const auto& s : part.steps) sum += s.poly.degree();
    CHECK(part.product_poly.degree() == sum);
    CHECK(sum <= d);
    CHECK(part.product_poly.has_factored_form());
    CHECK(static_cast<double>(part.audit.target_cells) <= d * d * d);
  }
}

TEST_CASE("verify_partition detects tampering") {
  auto pts = random_points(100, 5);
  auto part = guth_katz_partition(pts, 3, 5);
  REQUIRE(verify_partition(pts, part).empty());
  auto bad = part;
  bad.assignments[0] = ZBucket{};
  CHECK_FALSE(verify_partition(pts, bad).empty());
  auto worse = part;
  worse.steps[0].poly = C(1) + X;  // not a bisection of the input
  worse.steps[0].converged = true;
  CHECK_FALSE(verify_partition(pts, worse).empty());
}

TEST_CASE("lines_in_zero_set examples") {
  std::vector<Line3> ls{L(P(0, 0, 0), D(1, 0, 0), 0), L(P(0, 0, 0), D(0, 0, 1), 1),
                        L(P(1, 1, 0), D(0, 0, 1), 2)};
  auto in = lines_in_zero_set(X * Y, ls);
  REQUIRE(in.size() == 2);
  CHECK(in[0].id.value == 0);
  CHECK(in[1].id.value == 1);
  CHECK(lines_in_zero_set(X * X + Y * Y + Z * Z + C(1), ls).empty());
  CHECK(lines_in_zero_set(X, std::vector<Line3>{ls[0]}).empty());
  CHECK_THROWS_AS(lines_in_zero_set(MultiPoly(), ls), InvalidArgument);
}

TEST_CASE("surface_line_incidences examples") {
  const auto xaxis = L(P(0, 0, 0), D(1, 0, 0));
  auto a = surface_line_incidences(X * X - C(1), std::vector<Line3>{xaxis});
  CHECK(a.count == 2);
  CHECK(a.per_line[0].roots == 2);

  CHECK_THROWS_AS(surface_line_incidences(X, std::vector<Line3>{L(P(0, 0, 0), D(0, 1, 0))}),
                  LineInZeroSet);

  auto planes = MultiPoly::product({{X - C(1), 1}, {Y + C(2), 1}, {X + Y + Z - C(3), 1}});
  auto c = surface_line_incidences(planes, std::vector<Line3>{L(P(0, 0, 0), D(1, 2, 3))});
  CHECK(c.count == 3);
  CHECK(c.per_line[0].roots <= 3);

  auto irr = surface_line_incidences(X * X - C(2), std::vector<Line3>{xaxis});
  CHECK(irr.count == 0);
  CHECK(irr.per_line[0].nonrational_roots_possible);
}

TEST_CASE("critical_line_census examples") {
  const auto zaxis = L(P(0, 0, 0), D(0, 0, 1), 0);
  const auto xaxis = L(P(0, 0, 0), D(1, 0, 0), 1);
  const auto yaxis = L(P(0, 0, 0), D(0, 1, 0), 2);
  auto a = critical_line_census(MultiPoly::product({{X, 1}, {Y, 1}}), std::vector<Line3>{zaxis});
  REQUIRE(a.critical.size() == 1);
  CHECK(a.bound == 4);

  std::vector<Line3> misc{xaxis, yaxis, zaxis, L(P(0, 5, 0), D(0, 0, 1), 3), L(P(1, 0, 0), D(0, 1, 0), 4)};
  auto b = critical_line_census(MultiPoly::product({{X, 1}, {X - C(1), 1}}), misc);
  CHECK(b.critical.empty());

  auto c = critical_line_census(MultiPoly::product({{X, 1}, {Y, 1}, {X - Y, 1}}),
                                std::vector<Line3>{zaxis, xaxis, yaxis});
  REQUIRE(c.critical.size() == 1);
  CHECK(c.critical[0] == zaxis);
  CHECK(c.bound == 9);
  CHECK(c.within_bound);

  // Squares do not make a plane critical: p_sf is used.
  auto sq = critical_line_census(MultiPoly::product({{X, 2}}), std::vector<Line3>{yaxis, zaxis});
  CHECK(sq.critical.empty());
}

TEST_CASE("common_zero_lines examples") {
  const auto zaxis = L(P(0, 0, 0), D(0, 0, 1), 0);
  const auto xaxis = L(P(0, 0, 0), D(1, 0, 0), 1);
  auto a = common_zero_lines(X, Y, std::vector<Line3>{zaxis}, true);
  CHECK(a.lines.size() == 1);
  CHECK(a.bound == 1);
  CHECK(a.within_bound == true);

  auto b = common_zero_lines(X * Y, (X - Y) * Z, std::vector<Line3>{zaxis, xaxis}, true);
  CHECK(b.lines.size() == 2);
  CHECK(b.bound == 4);

  auto c = common_zero_lines(X, X + C(1), std::vector<Line3>{zaxis, xaxis, L(P(0, 1, 0), D(0, 0, 1))}, true);
  CHECK(c.lines.empty());

  auto d = common_zero_lines(X, Y, std::vector<Line3>{zaxis}, false);
  CHECK_FALSE(d.within_bound.has_value());
}
