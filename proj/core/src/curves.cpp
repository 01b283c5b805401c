#include "joints/curves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "joints/error.hpp"
#include "joints/joints.hpp"

namespace joints {

ParamCurve::ParamCurve(std::array<UniPoly, 3> coords, unsigned degree_bound, CurveId id)
    : coords_(std::move(coords)), degree_bound_(degree_bound), id_(id) {
  bool all_constant = true;
  for (const auto& c : coords_) {
    if (c.degree() > static_cast<int>(degree_bound_)) {
      throw InvalidArgument("curve #" + std::to_string(id_.value) + " coordinate degree " +
                            std::to_string(c.degree()) + " exceeds bound " +
                            std::to_string(degree_bound_));
    }
    all_constant = all_constant && c.is_constant();
  }
  if (all_constant) {
    throw InvalidArgument("curve #" + std::to_string(id_.value) + " is constant");
  }
}

ParamCurve ParamCurve::from_line(const Line3& line, CurveId id) {
  std::array<UniPoly, 3> coords;
  for (int a = 0; a < 3; ++a) {
    coords[static_cast<std::size_t>(a)] = UniPoly::linear(Scalar(line.dir[a]), line.base[a]);
  }
  return ParamCurve(std::move(coords), 1, id);
}

int ParamCurve::degree() const {
  return std::max({coords_[0].degree(), coords_[1].degree(), coords_[2].degree()});
}

Point3 ParamCurve::at(const Scalar& t) const {
  return Point3(coords_[0].evaluate(t), coords_[1].evaluate(t), coords_[2].evaluate(t));
}

ParamCurve ParamCurve::reparametrized(const Scalar& a, const Scalar& c) const {
  if (a == 0) throw InvalidArgument("reparametrization slope must be nonzero");
  std::array<UniPoly, 3> coords;
  for (std::size_t i = 0; i < 3; ++i) coords[i] = coords_[i].compose_affine(a, c);
  return ParamCurve(std::move(coords), degree_bound_, id_);
}

Direction3 tangent_direction(const ParamCurve& curve, const Scalar& t) {
  std::array<Scalar, 3> d;
  for (int a = 0; a < 3; ++a) d[static_cast<std::size_t>(a)] = curve.coord(a).derivative().evaluate(t);
  if (d[0] == 0 && d[1] == 0 && d[2] == 0) {
    throw VanishingDerivative("curve #" + std::to_string(curve.id().value) +
                              " has zero derivative at t = " + to_string(t));
  }
  return Direction3::from_rationals(d[0], d[1], d[2]);
}

namespace {

UniPoly gcd_all(const std::vector<UniPoly>& polys) {
  UniPoly g = polys.front();
  for (std::size_t i = 1; i < polys.size() && g.degree() != 0; ++i) g = unipoly_gcd(g, polys[i]);
  return g;
}

// Solves F(t, s) = 0 for all F, t the main and s the inner variable.
// nullopt when elimination gives no finite candidate set.
std::optional<ParameterPairs> solve_oriented(const std::vector<BiPoly>& system) {
  std::vector<BiPoly> eqs;
  for (const auto& f : system) {
    if (f.is_zero()) continue;
    if (f.total_degree() == 0) return ParameterPairs{};  // nonzero constant
    eqs.push_back(f);
  }
  if (eqs.empty()) return std::nullopt;

  std::vector<UniPoly> elim;
  std::vector<const BiPoly*> with_s;
  for (const auto& f : eqs) {
    if (f.degree(BiVar::inner) == 0) {
      elim.push_back(f.at_inner(0));
    } else {
      with_s.push_back(&f);
    }
  }
  for (std::size_t i = 0; i < with_s.size(); ++i) {
    for (std::size_t j = i + 1; j < with_s.size(); ++j) {
      auto r = sylvester_resultant(*with_s[i], *with_s[j], BiVar::inner);
      if (!r.is_zero()) elim.push_back(std::move(r));
    }
  }
  if (elim.empty()) return std::nullopt;

  ParameterPairs out;
  const UniPoly g = gcd_all(elim);
  if (g.degree() == 0) return out;
  const auto t_roots = rational_roots(g);
  out.complete = !t_roots.nonrational_roots_possible;
  for (const auto& [t0, mult] : t_roots.roots) {
    std::vector<UniPoly> in_s;
    for (const auto& f : eqs) {
      auto u = f.at_main(t0);
      if (!u.is_zero()) in_s.push_back(std::move(u));
    }
    if (in_s.empty()) return std::nullopt;
    const UniPoly h = gcd_all(in_s);
    if (h.degree() == 0) continue;
    const auto s_roots = rational_roots(h);
    if (s_roots.nonrational_roots_possible) out.complete = false;
    for (const auto& [s0, m2] : s_roots.roots) {
      const bool ok = std::all_of(eqs.begin(), eqs.end(),
                                  [&](const BiPoly& f) { return f.evaluate(t0, s0) == 0; });
      if (ok) out.pairs.emplace_back(t0, s0);
    }
  }
  return out;
}

ParameterPairs solve_system(const std::vector<BiPoly>& system, const std::string& what) {
  if (auto r = solve_oriented(system)) return *r;
  std::vector<BiPoly> swapped;
  for (const auto& f : system) swapped.push_back(f.swapped());
  if (auto r = solve_oriented(swapped)) {
    for (auto& [t, s] : r->pairs) std::swap(t, s);
    std::sort(r->pairs.begin(), r->pairs.end());
    return *r;
  }
  throw DegenerateElimination(what + ": no coordinate pair eliminates to finitely many parameters");
}

}  // namespace

ParameterPairs curve_pair_intersections(const ParamCurve& gamma, const ParamCurve& delta) {
  std::vector<BiPoly> system;
  for (int a = 0; a < 3; ++a) {
    system.push_back(BiPoly::from_main(gamma.coord(a)) - BiPoly::from_inner(delta.coord(a)));
  }
  auto out = solve_system(system, "curves #" + std::to_string(gamma.id().value) + " and #" +
                                      std::to_string(delta.id().value));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

ParameterPairs curve_self_crossings(const ParamCurve& gamma) {
  // (p(t) - p(s)) / (t - s) = sum_n a_n sum_{i<n} t^i s^(n-1-i)
  std::vector<BiPoly> system;
  for (int a = 0; a < 3; ++a) {
    std::map<std::pair<unsigned, unsigned>, Scalar> terms;
    const auto& c = gamma.coord(a).coefficients();
    for (unsigned n = 1; n < c.size(); ++n) {
      for (unsigned i = 0; i < n; ++i) terms[{i, n - 1 - i}] += c[n];
    }
    system.push_back(BiPoly::from_terms(terms));
  }
  ParameterPairs out;
  try {
    out = solve_system(system, "curve #" + std::to_string(gamma.id().value));
  } catch (const DegenerateElimination&) {
    return ParameterPairs{{}, false};
  }
  std::erase_if(out.pairs, [](const auto& p) { return !(p.first > p.second); });
  return out;
}

CurveJoints detect_curve_joints(std::span<const ParamCurve> curves) {
  {
    std::set<CurveId> ids;
    for (const auto& c : curves) {
      if (!ids.insert(c.id()).second) {
        throw InvalidArgument("duplicate curve id #" + std::to_string(c.id().value));
      }
    }
  }
  CurveJoints out;
  std::map<Point3, std::set<std::pair<CurveId, Scalar>>> sites;
  auto note = [&](bool complete) {
    if (!complete) {
      out.complete = false;
      ++out.flagged_pairs;
    }
  };

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto self = curve_self_crossings(curves[i]);
    note(self.complete);
    for (const auto& [t, s] : self.pairs) {
      auto& site = sites[curves[i].at(t)];
      site.emplace(curves[i].id(), t);
      site.emplace(curves[i].id(), s);
    }
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      ParameterPairs hits;
      try {
        hits = curve_pair_intersections(curves[i], curves[j]);
      } catch (const DegenerateElimination&) {
        hits.complete = false;
      }
      note(hits.complete);
      for (const auto& [t, s] : hits.pairs) {
        auto& site = sites[curves[i].at(t)];
        site.emplace(curves[i].id(), t);
        site.emplace(curves[j].id(), s);
      }
    }
  }

  std::map<CurveId, const ParamCurve*> by_id;
  for (const auto& c : curves) by_id[c.id()] = &c;
  for (const auto& [location, contributions] : sites) {
    TangentSet ts;
    ts.location = location;
    std::set<Direction3> dirs;
    for (const auto& [id, t] : contributions) {
      ts.contributing.emplace_back(id, t);
      try {
        dirs.insert(tangent_direction(*by_id.at(id), t));
      } catch (const VanishingDerivative&) {
        // no tangent line at a singular parameter
      }
    }
    ts.directions.assign(dirs.begin(), dirs.end());
    const auto n = multiplicity(ts.directions);
    if (n == 0) continue;
    out.joints.push_back(CurveJointRecord{location, std::move(ts), n});
  }
  return out;
}

CurveBoundReport curve_bound_report(std::span<const ParamCurve> curves) {
  if (curves.empty()) throw EmptyConfig("curve bound report needs at least one curve");
  return curve_bound_report(curves, detect_curve_joints(curves));
}

CurveBoundReport curve_bound_report(std::span<const ParamCurve> curves, const CurveJoints& joints) {
  if (curves.empty()) throw EmptyConfig("curve bound report needs at least one curve");
  CurveBoundReport r;
  r.curves = curves.size();
  r.joint_count = joints.joints.size();
  r.weighted_sum = 0;
  for (const auto& j : joints.joints) r.weighted_sum += real_sqrt(j.multiplicity);
  r.rhs = pow_three_halves(curves.size());
  r.ratio = r.weighted_sum / r.rhs;
  r.complete = joints.complete;
  r.flagged_pairs = joints.flagged_pairs;
  return r;
}

}  // namespace joints
