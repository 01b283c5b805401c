#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "joints/error.hpp"
#include "joints/generators.hpp"
#include "joints/incidence.hpp"
#include "joints/oracle.hpp"

using namespace joints;
using namespace joints::testing;

namespace {

LineConfig cfg(std::vector<Line3> lines) { return LineConfig::from_lines(std::move(lines)); }

std::vector<Direction3> bush_dirs(std::size_t n, std::uint64_t seed) {
  std::vector<Direction3> out;
  for (const auto& l : bush_lines(static_cast<std::int64_t>(n), seed).lines()) out.push_back(l.dir);
  return out;
}

}  // namespace

TEST_CASE("LineConfig collapses duplicates and rejects id clashes") {
  auto c = LineConfig::from_lines({L(P(0, 0, 0), D(1, 0, 0), 0), L(P(3, 0, 0), D(-1, 0, 0), 1),
                                   L(P(0, 0, 0), D(0, 1, 0), 2)});
  CHECK(c.size() == 2);
  CHECK(c.warnings().size() == 1);
  CHECK_THROWS_AS(LineConfig::from_lines({L(P(0, 0, 0), D(1, 0, 0), 4), L(P(0, 0, 0), D(0, 1, 0), 4)}),
                  InvalidArgument);
}

TEST_CASE("detect_joints examples") {
  auto j = detect_joints(cfg(axes()));
  REQUIRE(j.size() == 1);
  CHECK(j[0].location == P(0, 0, 0));
  CHECK(j[0].k_count == 3);
  CHECK(j[0].multiplicity == 1);

  auto g = detect_joints(grid_lines(2));
  CHECK(g.size() == 8);
  for (const auto& r : g) {
    CHECK(r.k_count == 3);
    CHECK(r.multiplicity == 1);
  }

  auto flat = detect_joints(cfg({L(P(0, 0, 0), D(1, 0, 0), 0), L(P(0, 0, 0), D(0, 1, 0), 1),
                                 L(P(0, 0, 0), D(1, 1, 0), 2)}));
  CHECK(flat.empty());
}

TEST_CASE("joint records list incident lines") {
  auto j = detect_joints(grid_lines(3));
  CHECK(j.size() == 27);
  const auto grid = grid_lines(3);
  const auto& lines = grid.lines();
  for (const auto& r : j) {
    CHECK(r.incident_line_ids.size() == r.k_count);
    for (auto id : r.incident_line_ids) CHECK(contains(lines[id.value], r.location));
  }
}

TEST_CASE("multiplicity examples") {
  std::vector<Direction3> e{D(1, 0, 0), D(0, 1, 0), D(0, 0, 1)};
  CHECK(multiplicity(e) == 1);
  CHECK(multiplicity(bush_dirs(4, 1)) == 4);
  std::vector<Direction3> four{D(1, 0, 0), D(0, 1, 0), D(1, 1, 0), D(0, 0, 1)};
  CHECK(multiplicity(four) == 3);
  CHECK(multiplicity(std::vector<Direction3>{}) == 0);
}

TEST_CASE("multiplicity refuses more than 10^4 concurrent lines") {
  std::vector<Direction3> many;
  for (long i = 0; i <= static_cast<long>(kMaxConcurrentLines); ++i) many.push_back(D(1, i, i * i));
  CHECK_THROWS_AS(multiplicity(many), ResourceLimit);
}

TEST_CASE("dyadic_stats examples") {
  auto j = detect_joints(cfg(axes()));
  auto s = dyadic_stats(j);
  REQUIRE(s.buckets.size() == 1);
  CHECK(s.buckets.begin()->first == DyadicKey{0, 1});

  JointRecord big;
  big.k_count = 20;
  big.multiplicity = 1140;
  std::vector<JointRecord> one{big};
  auto b = dyadic_stats(one);
  CHECK(b.buckets.begin()->first == DyadicKey{10, 4});

  CHECK(dyadic_stats(std::vector<JointRecord>{}).buckets.empty());
  CHECK(dyadic_exponent(1) == 0);
  CHECK(dyadic_exponent(1023) == 9);
  CHECK(dyadic_exponent(1024) == 10);
}

TEST_CASE("dyadic buckets partition the joint set") {
  auto j = detect_joints(grid_lines(3 ) );
  auto extra = detect_joints(bush_lines(9, 2));
  j.insert(j.end(), extra.begin(), extra.end());
  auto s = dyadic_stats(j);
  CHECK(s.total() == j.size());
  for (const auto& [key, members] : s.buckets) {
    for (const auto& r : members) {
      CHECK(dyadic_exponent(r.multiplicity) == key.lambda);
      CHECK(dyadic_exponent(r.k_count) == key.mu);
    }
  }
}

TEST_CASE("bound_report examples") {
  auto a = bound_report(cfg(axes()));
  CHECK(to_double(a.weighted_sum) == doctest::Approx(1.0));
  CHECK(to_double(a.rhs) == doctest::Approx(std::pow(3.0, 1.5)));
  CHECK(to_double(a.ratio) == doctest::Approx(0.19245).epsilon(1e-5));

  auto b = bound_report(bush_lines(20, 1));
  CHECK(b.joint_count == 1);
  CHECK(std::abs(to_double(b.weighted_sum) - std::sqrt(1140.0)) < 1e-12);
  CHECK(std::abs(to_double(b.rhs) - std::pow(20.0, 1.5)) < 1e-10);

  auto g = bound_report(grid_lines(2));
  CHECK(to_double(g.weighted_sum) == doctest::Approx(8.0));
  CHECK(to_double(g.rhs) == doctest::Approx(41.569).epsilon(1e-4));

  CHECK_THROWS_AS(bound_report(LineConfig{}), EmptyConfig);
}

TEST_CASE("high-precision sums keep 1e-12 relative accuracy") {
  // sqrt(2) to 30 significant digits, rounded.
  const Real s = real_sqrt(2);
  CHECK(format_real(s) == "1.41421356237309504880168872421");
  CHECK(format_real(s, 40) == "1.41421356237309504880168872420969807857");
  const Real r = pow_three_halves(75);
  const Real expect("649.519052838328985072792378065");
  CHECK(to_double(boost::multiprecision::abs(r - expect) / expect) < 1e-25);
}

TEST_CASE("proposition12_report examples") {
  auto a = proposition12_report(cfg(axes()), 1, 3);
  CHECK(a.class_size == 1);
  CHECK(to_double(a.lhs) == doctest::Approx(1.0));
  CHECK(to_double(a.term1) == doctest::Approx(3.0));
  CHECK(to_double(a.term2) == doctest::Approx(1.0));

  auto big = proposition12_report(bush_lines(6, 3), 8 * 6 * 6 * 6 + 1, 3);
  CHECK(big.class_size == 0);
  CHECK(to_double(big.lhs) == 0.0);

  auto g = proposition12_report(grid_lines(5), 1, 3);
  CHECK(g.class_size == 125);
  CHECK(to_double(g.lhs) == doctest::Approx(125.0));

  CHECK_THROWS(proposition12_report(cfg(axes()), 0, 3));
  CHECK_THROWS(proposition12_report(cfg(axes()), 1, 2));
}

TEST_CASE("check_lemma31 examples") {
  auto r = check_lemma31(cfg(axes()), {}, P(0, 0, 0), 2);
  CHECK(r.holds);
  CHECK(r.lhs_lines == 3);
  CHECK(r.rhs == Scalar(1, 4000));

  auto bush = bush_lines(10, 4);
  std::set<LineId> half;
  for (std::uint32_t i = 0; i < 5; ++i) half.insert(LineId{i});
  auto b = check_lemma31(bush, half, P(0, 0, 0), 5);
  CHECK(b.holds);
  CHECK(b.lhs_lines == 5);
  CHECK(b.multiplicity == 120);
  CHECK(b.subset_multiplicity == 10);
  CHECK(b.rhs == Scalar(3, 625));

  std::set<LineId> all{LineId{0}, LineId{1}, LineId{2}};
  CHECK_THROWS_AS(check_lemma31(cfg(axes()), all, P(0, 0, 0), 2), HypothesisViolated);
  // Not a joint / too many lines for k / unknown ids.
  CHECK_THROWS_AS(check_lemma31(cfg(axes()), {}, P(1, 0, 0), 2), HypothesisViolated);
  CHECK_THROWS_AS(check_lemma31(bush, {}, P(0, 0, 0), 4), HypothesisViolated);
  CHECK_THROWS_AS(check_lemma31(cfg(axes()), {LineId{77}}, P(0, 0, 0), 2), HypothesisViolated);
}

TEST_CASE("check_lemma32 examples") {
  auto r = check_lemma32(cfg(axes()), P(0, 0, 0), D(0, 0, 1), 2);
  CHECK(r.holds);
  CHECK(r.off_plane_lines == 1);
  CHECK(r.rhs == Scalar(1, 4000));

  auto b = check_lemma32(bush_lines(6, 9), P(0, 0, 0), D(3, -7, 2), 3);
  CHECK(b.holds);

  // All but one line in z = 0.
  auto mostly_flat = cfg({L(P(0, 0, 0), D(1, 0, 0), 0), L(P(0, 0, 0), D(0, 1, 0), 1),
                          L(P(0, 0, 0), D(1, 1, 0), 2), L(P(0, 0, 0), D(1, 2, 0), 3),
                          L(P(0, 0, 0), D(1, 1, 1), 4)});
  auto m = check_lemma32(mostly_flat, P(0, 0, 0), D(0, 0, 1), 3);
  CHECK(m.holds);
  CHECK(m.off_plane_lines == 1);

  CHECK_THROWS_AS(check_lemma32(cfg(axes()), P(5, 5, 5), D(0, 0, 1), 2), HypothesisViolated);
}

TEST_CASE("count_incidences examples") {
  std::vector<Point3> origin{P(0, 0, 0)};
  CHECK(count_incidences(origin, axes()) == 3);
  std::vector<Point3> verts;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) verts.push_back(P(x, y, z));
  CHECK(count_incidences(verts, grid_lines(2).lines()) == 24);
  CHECK(count_incidences(std::vector<Point3>{}, axes()) == 0);
}

TEST_CASE("st_report examples") {
  std::vector<Point2> one{Point2{1, 1}};
  std::vector<Line2> through{canonicalize_line(Point2{0, 0}, {Scalar(1), Scalar(1)})};
  auto a = st_report(one, through);
  CHECK(a.incidences == 1);
  CHECK(to_double(a.bound) == doctest::Approx(3.0));
  CHECK(to_double(a.ratio) == doctest::Approx(1.0 / 3.0));

  auto pg = planar_grid(10);
  auto g = st_report(pg.points, pg.lines);
  CHECK(g.incidences == 200);
  CHECK(std::abs(to_double(g.bound) - (std::cbrt(2000.0) * std::cbrt(2000.0) + 120)) < 1e-9);
  CHECK(to_double(g.ratio) < 1.0);

  std::vector<Point3> verts;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) verts.push_back(P(x, y, z));
  auto s = st_report(verts, grid_lines(2).lines(), 4);
  CHECK(s.incidences == 24);
  CHECK(s.projection.has_value());
}

TEST_CASE("rich_points_report examples") {
  auto a = rich_points_report(axes(), 3);
  CHECK(a.rich_points == 1);
  CHECK(a.quadratic_term == Scalar(1, 3));  // 3^2 / 3^3
  CHECK(a.linear_term == 1);
  CHECK(rich_points_report(grid_lines(2).lines(), 3).rich_points == 8);
  CHECK(rich_points_report(grid_lines(2).lines(), 4).rich_points == 0);
  CHECK_THROWS(rich_points_report(axes(), 1));
}

TEST_CASE("engine agrees with the brute-force oracle") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const auto lines = LineConfig::from_lines(lattice_lines(rng, 1 + rng() % 15, 3));
    const auto j = detect_joints(lines);
    const auto ref = oracle::brute_force_joints(lines.lines());
    const auto issues = oracle::compare(j, ref);
    CHECK(issues.empty());
  }
}

TEST_CASE("oracle compare reports disagreements") {
  auto j = detect_joints(cfg(axes()));
  auto ref = oracle::brute_force_joints(axes());
  j[0].multiplicity = 2;
  CHECK(oracle::compare(j, ref).size() == 1);
  j.clear();
  CHECK(oracle::compare(j, ref).size() == 1);
}

TEST_CASE("joint range: 1 <= N <= C(k,3), k = 3 gives N = 1") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const auto lines = LineConfig::from_lines(lattice_lines(rng, 12, 3));
    for (const auto& r : detect_joints(lines)) {
      const std::uint64_t k = r.k_count;
      CHECK(r.k_count >= 3);
      CHECK(r.multiplicity >= 1);
      CHECK(r.multiplicity <= k * (k - 1) * (k - 2) / 6);
      if (k == 3) CHECK(r.multiplicity == 1);
    }
  }
}
