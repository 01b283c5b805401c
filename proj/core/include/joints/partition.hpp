#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/poly.hpp"

namespace joints {

struct PointSet {
  std::vector<Point3> points;
  std::string id;
  bool duplicates_flagged = false;  // repeated points are rejected unless set
};

/// Non-constant monomials of degree <= d in graded-lex order
/// (x, y, z, x^2, xy, xz, y^2, yz, z^2, ...).
std::vector<MultiPoly::Monomial> veronese_monomials(unsigned d);
/// C(d+3, 3) - 1
std::size_t veronese_dimension(unsigned d);
std::vector<Scalar> veronese_lift(const Point3& pt, unsigned d);

struct SideCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t total() const { return positive + negative + zero; }
  /// Neither open side holds more than ceil(total/2) points.
  bool bisected() const;
};

struct BisectionStep {
  MultiPoly poly;
  unsigned degree_budget = 0;
  std::vector<SideCounts> per_set_counts;
  bool converged = false;
  int iterations = 0;
};

SideCounts side_counts(const MultiPoly& p, std::span<const Point3> points);

/// Seeded search for a nonzero polynomial of degree <= d whose zero set
/// bisects every set. Throws TooManySets when there are more sets than
/// veronese_dimension(d). The returned counts are exact; when `converged` is
/// false the best candidate found within `max_iter` iterations is returned.
BisectionStep discrete_ham_sandwich(std::span<const PointSet> sets, unsigned d,
                                    std::uint64_t seed, int max_iter = 400);

struct SignVector {
  std::vector<std::int8_t> signs;  // +1 / -1 per step polynomial
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  std::string to_string() const;
};

struct ZBucket {
  friend auto operator<=>(const ZBucket&, const ZBucket&) = default;
};

using CellAssignment = std::variant<SignVector, ZBucket>;

struct PartitionAudit {
  std::size_t nonempty_cells = 0;
  std::size_t max_cell_count = 0;
  std::size_t z_bucket_count = 0;
  int degree_used = 0;
  std::uint64_t target_cells = 0;  // 2^J
  bool all_converged = false;
  // Observed constants behind "~ d^3 cells with <~ S/d^3 points each".
  double cell_constant = 0;       // nonempty_cells / d^3
  double occupancy_constant = 0;  // max_cell_count / (S / d^3)
};

struct Partition {
  double degree_budget = 0;
  std::vector<unsigned> schedule;  // per-step degree budgets
  std::vector<BisectionStep> steps;
  MultiPoly product_poly;  // factored form = the step polynomials
  unsigned J = 0;
  std::vector<CellAssignment> assignments;  // parallel to the input points
  PartitionAudit audit;
};

/// Degree budgets of the successive bisection steps for a total budget d:
/// step j gets the smallest m with m^3 >= 2^(j-1) and C(m+3,3)-1 >= 2^(j-1);
/// J is the largest count keeping the sum <= d and 2^J <= d^3.
std::vector<unsigned> step_degree_schedule(double d);

/// Iterated bisection partition. Throws InvalidArgument for empty input or
/// d <= 1 and BudgetTooSmall when no step fits the budget.
Partition guth_katz_partition(const PointSet& points, double d, std::uint64_t seed,
                              int max_iter = 400);

/// Sign vector over the step polynomials, or ZBucket if any of them vanishes.
std::vector<CellAssignment> assign_cells(const PointSet& points, const Partition& partition);

/// Independent re-check of a partition's ledgers; returns human-readable
/// violations (empty when everything holds).
std::vector<std::string> verify_partition(const PointSet& points, const Partition& partition);

// ---------------------------------------------------------------------------
// Lines versus zero sets.

/// Lines along which p vanishes identically.
std::vector<Line3> lines_in_zero_set(const MultiPoly& p, std::span<const Line3> lines);

struct LineRootCount {
  LineId id;
  std::size_t roots = 0;  // distinct rational crossings
  bool nonrational_roots_possible = false;
};

struct SurfaceIncidences {
  std::size_t count = 0;
  std::vector<LineRootCount> per_line;
};

/// Crossings of each line with the zero set of p. Throws LineInZeroSet if p
/// vanishes on a line.
SurfaceIncidences surface_line_incidences(const MultiPoly& p, std::span<const Line3> lines);

struct CriticalLineCensus {
  std::vector<Line3> critical;
  std::uint64_t bound = 0;  // (deg p)^2
  bool within_bound = true;
};

/// Candidates on which p_sf and its whole gradient vanish identically.
CriticalLineCensus critical_line_census(const MultiPoly& p, std::span<const Line3> candidates);

struct CommonZeroLines {
  std::vector<Line3> lines;
  std::uint64_t bound = 0;           // deg p1 * deg p2
  std::optional<bool> within_bound;  // only evaluated when coprimality is asserted
};

CommonZeroLines common_zero_lines(const MultiPoly& p1, const MultiPoly& p2,
                                  std::span<const Line3> candidates, bool coprime_asserted);

}  // namespace joints
