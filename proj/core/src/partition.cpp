#include "joints/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "joints/error.hpp"

namespace joints {

std::vector<MultiPoly::Monomial> veronese_monomials(unsigned d) {
  std::vector<MultiPoly::Monomial> out;
  for (unsigned deg = 1; deg <= d; ++deg) {
    for (unsigned a = deg + 1; a-- > 0;) {
      for (unsigned b = deg - a + 1; b-- > 0;) out.push_back({a, b, deg - a - b});
    }
  }
  return out;
}

std::size_t veronese_dimension(unsigned d) {
  const std::size_t n = d;
  return (n + 3) * (n + 2) * (n + 1) / 6 - 1;
}

std::vector<Scalar> veronese_lift(const Point3& pt, unsigned d) {
  if (d < 1) throw InvalidArgument("lift degree must be at least 1");
  std::array<std::vector<Scalar>, 3> pw;
  for (int axis = 0; axis < 3; ++axis) {
    auto& v = pw[static_cast<std::size_t>(axis)];
    v.assign(d + 1, Scalar(1));
    for (unsigned e = 1; e <= d; ++e) v[e] = v[e - 1] * pt[axis];
  }
  std::vector<Scalar> out;
  out.reserve(veronese_dimension(d));
  for (const auto& m : veronese_monomials(d)) out.push_back(pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]]);
  return out;
}

bool SideCounts::bisected() const {
  const std::size_t half = (total() + 1) / 2;
  return positive <= half && negative <= half;
}

SideCounts side_counts(const MultiPoly& p, std::span<const Point3> points) {
  SideCounts c;
  for (const auto& pt : points) {
    const int s = sgn(p.evaluate(pt));
    if (s > 0) {
      ++c.positive;
    } else if (s < 0) {
      ++c.negative;
    } else {
      ++c.zero;
    }
  }
  return c;
}

namespace {

std::size_t discrepancy(const std::vector<SideCounts>& counts) {
  std::size_t total = 0;
  for (const auto& c : counts) {
    const std::size_t half = (c.total() + 1) / 2;
    total += (c.positive > half ? c.positive - half : 0) + (c.negative > half ? c.negative - half : 0);
  }
  return total;
}

// Solves A x = b over Q; nullopt when A is singular.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> A,
                                                std::vector<Scalar> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Scalar f = A[r][col] / A[col][col];
      for (std::size_t k = col; k < n; ++k) A[r][k] -= f * A[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= A[i][i];
  return b;
}

MultiPoly poly_from_coefficients(const std::vector<Scalar>& w,
                                 const std::vector<MultiPoly::Monomial>& monomials) {
  std::map<MultiPoly::Monomial, Scalar> terms;
  terms[{0, 0, 0}] = w[0];
  for (std::size_t i = 0; i < monomials.size(); ++i) terms[monomials[i]] = w[i + 1];
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

BisectionStep discrete_ham_sandwich(std::span<const PointSet> sets, unsigned d,
                                    std::uint64_t seed, int max_iter) {
  if (d < 1) throw InvalidArgument("bisection degree must be at least 1");
  const std::size_t M = veronese_dimension(d);
  if (sets.size() > M) {
    throw TooManySets(std::to_string(sets.size()) + " sets exceed C(d+3,3)-1 = " +
                      std::to_string(M) + " for d = " + std::to_string(d));
  }
  const auto monomials = veronese_monomials(d);
  const std::size_t width = M + 1;  // constant term first

  // Lifted rows (1, lift(p)) per point, grouped by set.
  std::vector<std::vector<std::vector<Scalar>>> rows(sets.size());
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& p : sets[i].points) {
      auto lift = veronese_lift(p, d);
      lift.insert(lift.begin(), Scalar(1));
      rows[i].push_back(std::move(lift));
    }
    if (!rows[i].empty()) active.push_back(i);
  }

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), d};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> coeff(1, 1000);
  std::bernoulli_distribution flip(0.5);

  auto random_vector = [&] {
    std::vector<Scalar> w(width);
    for (auto& c : w) c = flip(rng) ? coeff(rng) : -coeff(rng);
    return w;
  };
  auto counts_for = [&](const MultiPoly& p) {
    std::vector<SideCounts> counts;
    for (const auto& s : sets) counts.push_back(side_counts(p, s.points));
    return counts;
  };

  BisectionStep best;
  best.degree_budget = d;
  std::size_t best_score = std::numeric_limits<std::size_t>::max();
  auto consider = [&](const std::vector<Scalar>& w, int iterations) {
    MultiPoly p = poly_from_coefficients(w, monomials);
    auto counts = counts_for(p);
    const std::size_t score = discrepancy(counts);
    if (score < best_score) {
      best_score = score;
      best.poly = std::move(p);
      best.per_set_counts = std::move(counts);
      best.converged = score == 0;
    }
    best.iterations = iterations;
    return score == 0;
  };

  if (active.empty()) {
    consider(random_vector(), 0);
    return best;
  }

  // Each restart fixes a random polynomial and frees one coefficient per
  // nonempty set (always including the constant term). Each iteration solves
  // for the free coefficients that put the zero set through the current
  // median of every set, then re-ranks. A fixed point is an exact bisection.
  const std::size_t K = active.size();
  int iterations = 0;
  while (iterations < max_iter) {
    std::vector<Scalar> w = random_vector();
    std::vector<std::size_t> free_cols{0};
    {
      std::vector<std::size_t> pool(M);
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      free_cols.insert(free_cols.end(), pool.begin(), pool.begin() + static_cast<long>(K - 1));
    }
    std::vector<bool> is_free(width, false);
    for (auto c : free_cols) is_free[c] = true;

    std::set<std::vector<std::size_t>> visited;
    while (iterations < max_iter) {
      ++iterations;
      std::vector<std::vector<Scalar>> A(K, std::vector<Scalar>(K));
      std::vector<Scalar> b(K);
      std::vector<std::size_t> state;
      for (std::size_t e = 0; e < K; ++e) {
        const auto& set_rows = rows[active[e]];
        std::vector<Scalar> values(set_rows.size());
        for (std::size_t r = 0; r < set_rows.size(); ++r) {
          Scalar v = 0;
          for (std::size_t c = 0; c < width; ++c) v += w[c] * set_rows[r][c];
          values[r] = std::move(v);
        }
        std::vector<std::size_t> order(set_rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b2) {
          if (int c = cmp(values[a], values[b2]); c != 0) return c < 0;
          return a < b2;
        });
        const std::size_t n = order.size();
        // Odd: the median itself. Even: midpoint of the two middle values.
        std::vector<Scalar> target = set_rows[order[(n - 1) / 2]];
        state.push_back(order[(n - 1) / 2]);
        if (n % 2 == 0) {
          const auto& other = set_rows[order[n / 2]];
          for (std::size_t c = 0; c < width; ++c) target[c] = (target[c] + other[c]) / 2;
          state.push_back(order[n / 2]);
        }
        for (std::size_t f = 0; f < K; ++f) A[e][f] = target[free_cols[f]];
        Scalar rhs = 0;
        for (std::size_t c = 0; c < width; ++c) {
          if (!is_free[c]) rhs -= w[c] * target[c];
        }
        b[e] = std::move(rhs);
      }
      if (!visited.insert(state).second) break;  // cycling; restart
      auto x = solve_linear(std::move(A), std::move(b));
      if (!x) break;
      for (std::size_t f = 0; f < K; ++f) w[free_cols[f]] = (*x)[f];
      if (consider(w, iterations)) return best;
    }
  }
  return best;
}

std::string SignVector::to_string() const {
  std::string s;
  for (auto v : signs) s.push_back(v > 0 ? '+' : '-');
  return s;
}

namespace {

// Smallest m >= 1 with m^3 >= 2^(j-1) and C(m+3,3)-1 >= 2^(j-1).
unsigned step_degree(unsigned j) {
  const std::uint64_t sets = std::uint64_t{1} << (j - 1);
  unsigned m = 1;
  while (std::uint64_t{m} * m * m < sets || veronese_dimension(m) < sets) ++m;
  return m;
}

}  // namespace

std::vector<unsigned> step_degree_schedule(double d) {
  std::vector<unsigned> out;
  double used = 0;
  const double cells_cap = d * d * d;
  for (unsigned j = 1; j < 63; ++j) {
    const unsigned m = step_degree(j);
    if (used + m > d || std::ldexp(1.0, static_cast<int>(j)) > cells_cap) break;
    used += m;
    out.push_back(m);
  }
  return out;
}

Partition guth_katz_partition(const PointSet& points, double d, std::uint64_t seed,
                              int max_iter) {
  if (points.points.empty()) throw InvalidArgument("partition needs at least one point");
  if (!(d > 1)) throw InvalidArgument("partition degree budget must exceed 1");
  if (!points.duplicates_flagged) {
    std::vector<Point3> sorted = points.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("point set contains unflagged duplicates");
    }
  }

  Partition part;
  part.degree_budget = d;
  part.schedule = step_degree_schedule(d);
  if (part.schedule.empty()) {
    throw BudgetTooSmall("degree budget " + std::to_string(d) + " admits no bisection step");
  }
  part.J = static_cast<unsigned>(part.schedule.size());

  const std::size_t S = points.points.size();
  // Cells keyed by sign prefix; the empty prefix holds everything.
  std::map<SignVector, std::vector<std::size_t>> cells{{SignVector{}, {}}};
  cells.begin()->second.resize(S);
  std::iota(cells.begin()->second.begin(), cells.begin()->second.end(), 0);
  std::vector<bool> in_z(S, false);

  for (unsigned j = 1; j <= part.J; ++j) {
    // All 2^(j-1) sign classes, empty ones included, in canonical order.
    std::vector<SignVector> keys;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (j - 1)); ++code) {
      SignVector sv;
      for (unsigned b = 0; b + 1 < j; ++b) {
        sv.signs.push_back(((code >> (j - 2 - b)) & 1U) ? -1 : 1);
      }
      keys.push_back(std::move(sv));
    }
    std::vector<PointSet> sets;
    for (const auto& key : keys) {
      PointSet s;
      s.id = key.to_string();
      if (auto it = cells.find(key); it != cells.end()) {
        for (auto idx : it->second) s.points.push_back(points.points[idx]);
      }
      sets.push_back(std::move(s));
    }
    auto step = discrete_ham_sandwich(sets, part.schedule[j - 1], seed + 0x9e3779b97f4a7c15ULL * j,
                                      max_iter);

    std::map<SignVector, std::vector<std::size_t>> next;
    for (const auto& [key, members] : cells) {
      for (auto idx : members) {
        const int s = sgn(step.poly.evaluate(points.points[idx]));
        if (s == 0) {
          in_z[idx] = true;
          continue;
        }
        SignVector child = key;
        child.signs.push_back(static_cast<std::int8_t>(s));
        next[child].push_back(idx);
      }
    }
    cells = std::move(next);
    part.steps.push_back(std::move(step));
  }

  std::vector<PolyFactor> factors;
  for (const auto& s : part.steps) factors.push_back(PolyFactor{s.poly, 1});
  part.product_poly = MultiPoly::product(std::move(factors));

  part.assignments.assign(S, ZBucket{});
  for (const auto& [key, members] : cells) {
    for (auto idx : members) part.assignments[idx] = key;
  }

  auto& audit = part.audit;
  audit.nonempty_cells = cells.size();
  for (const auto& [key, members] : cells) {
    audit.max_cell_count = std::max(audit.max_cell_count, members.size());
  }
  audit.z_bucket_count = static_cast<std::size_t>(std::count(in_z.begin(), in_z.end(), true));
  audit.degree_used = part.product_poly.degree();
  audit.target_cells = std::uint64_t{1} << part.J;
  audit.all_converged = std::all_of(part.steps.begin(), part.steps.end(),
                                    [](const BisectionStep& s) { return s.converged; });
  const double d3 = d * d * d;
  audit.cell_constant = static_cast<double>(audit.nonempty_cells) / d3;
  audit.occupancy_constant = static_cast<double>(audit.max_cell_count) * d3 / static_cast<double>(S);
  return part;
}

std::vector<CellAssignment> assign_cells(const PointSet& points, const Partition& partition) {
  std::vector<CellAssignment> out;
  out.reserve(points.points.size());
  for (const auto& pt : points.points) {
    SignVector sv;
    bool zero = false;
    for (const auto& step : partition.steps) {
      const int s = sgn(step.poly.evaluate(pt));
      if (s == 0) {
        zero = true;
        break;
      }
      sv.signs.push_back(static_cast<std::int8_t>(s));
    }
    if (zero) {
      out.emplace_back(ZBucket{});
    } else {
      out.emplace_back(std::move(sv));
    }
  }
  return out;
}

std::vector<std::string> verify_partition(const PointSet& points, const Partition& partition) {
  std::vector<std::string> issues;
  auto fail = [&](std::string msg) { issues.push_back(std::move(msg)); };

  int degree_sum = 0;
  for (std::size_t j = 0; j < partition.steps.size(); ++j) {
    const auto& step = partition.steps[j];
    if (step.poly.is_zero()) fail("step " + std::to_string(j + 1) + " polynomial is zero");
    if (step.poly.degree() > static_cast<int>(step.degree_budget)) {
      fail("step " + std::to_string(j + 1) + " exceeds its degree budget");
    }
    degree_sum += step.poly.degree();
  }
  if (partition.product_poly.degree() != degree_sum) fail("product degree != sum of step degrees");
  if (degree_sum > partition.degree_budget) fail("product degree exceeds the budget");
  if (partition.audit.nonempty_cells > partition.audit.target_cells) fail("more cells than 2^J");
  if (static_cast<double>(partition.audit.target_cells) >
      partition.degree_budget * partition.degree_budget * partition.degree_budget) {
    fail("2^J exceeds d^3");
  }

  const auto recomputed = assign_cells(points, partition);
  if (recomputed != partition.assignments) fail("assignments do not match re-evaluated signs");

  // Halving ledger: replay every step with the membership it actually saw.
  std::vector<std::optional<SignVector>> current(points.points.size(), SignVector{});
  for (std::size_t j = 0; j < partition.steps.size(); ++j) {
    const auto& step = partition.steps[j];
    std::map<SignVector, std::size_t> before;
    std::map<SignVector, std::size_t> after;
    for (std::size_t i = 0; i < points.points.size(); ++i) {
      if (!current[i]) continue;
      ++before[*current[i]];
      const int s = sgn(step.poly.evaluate(points.points[i]));
      if (s == 0) {
        current[i].reset();
        continue;
      }
      current[i]->signs.push_back(static_cast<std::int8_t>(s));
      ++after[*current[i]];
    }
    if (!step.converged) continue;
    for (const auto& [key, count] : after) {
      SignVector parent{std::vector<std::int8_t>(key.signs.begin(), key.signs.end() - 1)};
      const std::size_t n = before[parent];
      if (count > (n + 1) / 2) {
        fail("step " + std::to_string(j + 1) + " cell " + key.to_string() + " holds " +
             std::to_string(count) + " > ceil(" + std::to_string(n) + "/2)");
      }
    }
    for (const auto& c : step.per_set_counts) {
      if (!c.bisected()) fail("converged step " + std::to_string(j + 1) + " is not a bisection");
    }
  }
  return issues;
}

std::vector<Line3> lines_in_zero_set(const MultiPoly& p, std::span<const Line3> lines) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no proper zero set");
  std::vector<Line3> out;
  for (const auto& l : lines) {
    if (restrict_to_line(p, l).is_zero()) out.push_back(l);
  }
  return out;
}

SurfaceIncidences surface_line_incidences(const MultiPoly& p, std::span<const Line3> lines) {
  SurfaceIncidences out;
  for (const auto& l : lines) {
    const UniPoly q = restrict_to_line(p, l);
    if (q.is_zero()) {
      throw LineInZeroSet("line #" + std::to_string(l.id.value) + " lies in the zero set");
    }
    const auto roots = rational_roots(q);
    LineRootCount rc{l.id, roots.roots.size(), roots.nonrational_roots_possible};
    if (static_cast<int>(rc.roots) > p.degree()) {
      throw Error("line #" + std::to_string(l.id.value) + " meets the zero set more than deg p times");
    }
    out.count += rc.roots;
    out.per_line.push_back(rc);
  }
  return out;
}

CriticalLineCensus critical_line_census(const MultiPoly& p, std::span<const Line3> candidates) {
  const MultiPoly sf = square_free_part(p);
  const auto grad = gradient(sf);
  CriticalLineCensus out;
  const auto deg = static_cast<std::uint64_t>(std::max(p.degree(), 0));
  out.bound = deg * deg;
  for (const auto& l : candidates) {
    if (!restrict_to_line(sf, l).is_zero()) continue;
    if (std::all_of(grad.begin(), grad.end(),
                    [&](const MultiPoly& g) { return restrict_to_line(g, l).is_zero(); })) {
      out.critical.push_back(l);
    }
  }
  out.within_bound = out.critical.size() <= out.bound;
  return out;
}

CommonZeroLines common_zero_lines(const MultiPoly& p1, const MultiPoly& p2,
                                  std::span<const Line3> candidates, bool coprime_asserted) {
  CommonZeroLines out;
  for (const auto& l : candidates) {
    if (restrict_to_line(p1, l).is_zero() && restrict_to_line(p2, l).is_zero()) {
      out.lines.push_back(l);
    }
  }
  out.bound = static_cast<std::uint64_t>(std::max(p1.degree(), 0)) *
              static_cast<std::uint64_t>(std::max(p2.degree(), 0));
  if (coprime_asserted) out.within_bound = out.lines.size() <= out.bound;
  return out;
}

}  // namespace joints
