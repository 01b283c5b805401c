#include "joints/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "joints/error.hpp"

namespace joints {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& field, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw ParseError("generator '" + whole + "': expected an integer, got '" + field + "'");
  }
  return v;
}

std::uint64_t parse_seed(const std::string& field, const std::string& whole) {
  const std::string digits = field.rfind("seed", 0) == 0 ? field.substr(4) : field;
  const auto v = parse_int(digits, whole);
  if (v < 0) throw ParameterOutOfRange("generator '" + whole + "': seed must be non-negative");
  return static_cast<std::uint64_t>(v);
}

void require(bool ok, const std::string& whole, const std::string& what) {
  if (!ok) throw ParameterOutOfRange("generator '" + whole + "': " + what);
}

GeneratorSpec parse_single(const std::string& text, std::uint64_t default_seed) {
  const auto f = split(text, ':');
  const std::string& name = f[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (f.size() - 1 < lo || f.size() - 1 > hi) {
      throw ParseError("generator '" + text + "': wrong number of fields");
    }
  };
  GeneratorSpec g;
  g.seed = default_seed;
  if (name == "grid" || name == "curve_grid" || name == "planar_grid") {
    arity(1, 1);
    g.kind = name == "grid" ? GeneratorSpec::Kind::grid
             : name == "curve_grid" ? GeneratorSpec::Kind::curve_grid
                                    : GeneratorSpec::Kind::planar_grid;
    g.k = parse_int(f[1], text);
    require(g.k >= 1, text, "k must be at least 1");
    require(g.k <= 1000, text, "k must be at most 1000");
  } else if (name == "bush") {
    arity(1, 2);
    g.kind = GeneratorSpec::Kind::bush;
    g.k = parse_int(f[1], text);
    if (f.size() > 2) g.seed = parse_seed(f[2], text);
    require(g.k >= 1, text, "L must be at least 1");
    require(g.k <= 500, text, "L must be at most 500");
  } else if (name == "random" || name == "points") {
    arity(1, 3);
    g.kind = name == "random" ? GeneratorSpec::Kind::random : GeneratorSpec::Kind::points;
    g.k = parse_int(f[1], text);
    if (f.size() > 2) g.seed = parse_seed(f[2], text);
    if (f.size() > 3) {
      g.bound = parse_int(f[3], text);
      require(g.bound >= 1, text, "coordinate bound must be at least 1");
    }
    require(g.k >= 1, text, "count must be at least 1");
    require(g.k <= 10'000'000, text, "count must be at most 10^7");
  } else if (name == "coplanar" || name == "coplanar_pencil") {
    arity(1, 1);
    g.kind = GeneratorSpec::Kind::coplanar_pencil;
    g.k = parse_int(f[1], text);
    require(g.k >= 1, text, "L must be at least 1");
  } else if (name == "curve_bush") {
    arity(2, 3);
    g.kind = GeneratorSpec::Kind::curve_bush;
    g.k = parse_int(f[1], text);
    g.b = parse_int(f[2], text);
    if (f.size() > 3) g.seed = parse_seed(f[3], text);
    require(g.k >= 1, text, "L must be at least 1");
    require(g.k <= 200, text, "L must be at most 200");
    require(g.b >= 1, text, "b must be at least 1");
    require(g.b <= 12, text, "b must be at most 12");
  } else {
    throw ParseError("unknown generator '" + name + "'");
  }
  return g;
}

std::string kind_name(const GeneratorSpec& g) {
  switch (g.kind) {
    case GeneratorSpec::Kind::grid: return "grid";
    case GeneratorSpec::Kind::bush: return "bush";
    case GeneratorSpec::Kind::random: return "random";
    case GeneratorSpec::Kind::coplanar_pencil: return "coplanar";
    case GeneratorSpec::Kind::mixed: return "mixed";
    case GeneratorSpec::Kind::curve_bush: return "curve_bush";
    case GeneratorSpec::Kind::curve_grid: return "curve_grid";
    case GeneratorSpec::Kind::planar_grid: return "planar_grid";
    case GeneratorSpec::Kind::points: return "points";
  }
  return "?";
}

[[noreturn]] void wrong_output(const GeneratorSpec& g, const std::string& what) {
  throw InvalidArgument("generator '" + g.to_string() + "' does not produce " + what);
}

std::array<Integer, 3> random_vector(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  return {Integer(dist(rng)), Integer(dist(rng)), Integer(dist(rng))};
}

Integer det(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b,
            const std::array<Integer, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool parallel(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 &&
         a[0] * b[1] - a[1] * b[0] == 0;
}

// Directions with every triple spanning (every pair independent for L < 3).
std::vector<Direction3> spanning_directions(std::int64_t L, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<Integer, 3>> raw;
  const long range = 50;
  while (static_cast<std::int64_t>(raw.size()) < L) {
    auto v = random_vector(rng, range);
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < raw.size(); ++i) {
      if (parallel(raw[i], v)) ok = false;
      for (std::size_t j = i + 1; ok && j < raw.size(); ++j) {
        if (det(raw[i], raw[j], v) == 0) ok = false;
      }
    }
    if (ok) raw.push_back(v);
  }
  std::vector<Direction3> out;
  for (const auto& v : raw) out.push_back(Direction3::from_integers(v[0], v[1], v[2]));
  return out;
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  switch (kind) {
    case Kind::grid:
    case Kind::curve_grid:
    case Kind::planar_grid:
    case Kind::coplanar_pencil:
      return kind_name(*this) + ":" + std::to_string(k);
    case Kind::bush:
      return "bush:" + std::to_string(k) + ":seed" + std::to_string(seed);
    case Kind::random:
    case Kind::points: {
      std::string s = kind_name(*this) + ":" + std::to_string(k) + ":seed" + std::to_string(seed);
      if (bound != 0) s += ":" + std::to_string(bound);
      return s;
    }
    case Kind::curve_bush:
      return "curve_bush:" + std::to_string(k) + ":" + std::to_string(b) + ":seed" +
             std::to_string(seed);
    case Kind::mixed: {
      std::string s;
      for (const auto& p : parts) s += (s.empty() ? "" : "+") + p.to_string();
      return s;
    }
  }
  return {};
}

bool GeneratorSpec::yields_lines() const {
  if (kind == Kind::mixed) {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.yields_lines(); });
  }
  return kind == Kind::grid || kind == Kind::bush || kind == Kind::random ||
         kind == Kind::coplanar_pencil;
}

bool GeneratorSpec::yields_curves() const {
  return kind == Kind::curve_bush || kind == Kind::curve_grid;
}

GeneratorSpec parse_generator(const std::string& text, std::uint64_t default_seed) {
  if (text.empty()) throw ParseError("empty generator string");
  if (text.find('+') == std::string::npos) return parse_single(text, default_seed);
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mixed;
  for (const auto& part : split(text, '+')) {
    auto p = parse_single(part, default_seed);
    if (!p.yields_lines()) {
      throw ParseError("generator '" + text + "': mixed recipes combine line generators only");
    }
    g.parts.push_back(std::move(p));
  }
  return g;
}

LineConfig grid_lines(std::int64_t k) {
  if (k < 1) throw ParameterOutOfRange("grid needs k >= 1");
  std::vector<Line3> lines;
  const std::array<Direction3, 3> axes{Direction3::from_integers(1, 0, 0),
                                       Direction3::from_integers(0, 1, 0),
                                       Direction3::from_integers(0, 0, 1)};
  for (int axis = 0; axis < 3; ++axis) {
    for (std::int64_t a = 0; a < k; ++a) {
      for (std::int64_t b = 0; b < k; ++b) {
        Point3 p;
        p[(axis + 1) % 3] = Scalar(static_cast<long>(a));
        p[(axis + 2) % 3] = Scalar(static_cast<long>(b));
        lines.push_back(canonicalize_line(p, axes[static_cast<std::size_t>(axis)]));
      }
    }
  }
  return LineConfig::from_lines_renumbered(std::move(lines), "grid:" + std::to_string(k));
}

LineConfig bush_lines(std::int64_t L, std::uint64_t seed) {
  if (L < 1) throw ParameterOutOfRange("bush needs L >= 1");
  std::vector<Line3> lines;
  for (const auto& d : spanning_directions(L, seed)) lines.push_back(canonicalize_line(Point3(), d));
  return LineConfig::from_lines_renumbered(
      std::move(lines), "bush:" + std::to_string(L) + ":seed" + std::to_string(seed));
}

LineConfig random_lines(std::int64_t L, std::uint64_t seed, std::int64_t bound) {
  if (L < 1 || bound < 1) throw ParameterOutOfRange("random lines need L >= 1 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  auto draw = [&] { return Point3(Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng))); };
  std::vector<Line3> lines;
  std::set<std::pair<Point3, std::array<Integer, 3>>> seen;
  const std::int64_t max_draws = 1000 * L + 1000;
  for (std::int64_t draws = 0; static_cast<std::int64_t>(lines.size()) < L; ++draws) {
    if (draws > max_draws) {
      throw ParameterOutOfRange("random:" + std::to_string(L) + " cannot find that many distinct "
                                "lines with coordinate bound " + std::to_string(bound));
    }
    const Point3 a = draw();
    const Point3 b = draw();
    if (a == b) continue;
    Line3 l = line_through(a, b, LineId{static_cast<std::uint32_t>(lines.size())});
    if (seen.emplace(l.base, l.dir.components()).second) lines.push_back(std::move(l));
  }
  return LineConfig::from_lines(std::move(lines), "random:" + std::to_string(L) + ":seed" +
                                                      std::to_string(seed) + ":" +
                                                      std::to_string(bound));
}

LineConfig coplanar_pencil(std::int64_t L) {
  if (L < 1) throw ParameterOutOfRange("coplanar pencil needs L >= 1");
  std::vector<Line3> lines;
  for (std::int64_t i = 0; i < L; ++i) {
    lines.push_back(canonicalize_line(Point3(), Direction3::from_integers(1, Integer(static_cast<long>(i)), 0)));
  }
  return LineConfig::from_lines_renumbered(std::move(lines), "coplanar:" + std::to_string(L));
}

std::vector<ParamCurve> curve_bush(std::int64_t L, std::int64_t b, std::uint64_t seed) {
  if (L < 1 || b < 1) throw ParameterOutOfRange("curve bush needs L >= 1 and b >= 1");
  const auto dirs = spanning_directions(L, seed);
  std::mt19937_64 rng(seed ^ 0xc0ffee);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<ParamCurve> out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    std::array<UniPoly, 3> coords;
    for (int a = 0; a < 3; ++a) {
      std::vector<Scalar> c(static_cast<std::size_t>(b) + 1);
      c[1] = Scalar(dirs[i][a]);
      for (std::size_t e = 2; e < c.size(); ++e) c[e] = Scalar(coeff(rng));
      coords[static_cast<std::size_t>(a)] = UniPoly(std::move(c));
    }
    out.emplace_back(std::move(coords), static_cast<unsigned>(b),
                     CurveId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<ParamCurve> curve_grid(std::int64_t k) {
  const auto config = grid_lines(k);
  std::vector<ParamCurve> out;
  for (const auto& l : config.lines()) out.push_back(ParamCurve::from_line(l, CurveId{l.id.value}));
  return out;
}

PointSet random_points(std::int64_t S, std::uint64_t seed, std::int64_t bound) {
  if (S < 1 || bound < 1) throw ParameterOutOfRange("random points need S >= 1 and bound >= 1");
  const double side = 2.0 * static_cast<double>(bound) + 1;
  if (static_cast<double>(S) > side * side * side) {
    throw ParameterOutOfRange("more points requested than lattice points within the bound");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  PointSet out;
  out.id = "random:" + std::to_string(S) + ":seed" + std::to_string(seed);
  std::set<Point3> seen;
  while (static_cast<std::int64_t>(out.points.size()) < S) {
    Point3 p(Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng)));
    if (seen.insert(p).second) out.points.push_back(std::move(p));
  }
  return out;
}

PlanarConfig planar_grid(std::int64_t k) {
  if (k < 1) throw ParameterOutOfRange("planar grid needs k >= 1");
  PlanarConfig out;
  for (std::int64_t x = 0; x < k; ++x) {
    for (std::int64_t y = 0; y < k; ++y) {
      out.points.push_back(Point2{Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y))});
    }
  }
  std::uint32_t id = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    const Scalar v(static_cast<long>(i));
    out.lines.push_back(canonicalize_line(Point2{v, 0}, {Scalar(0), Scalar(1)}, LineId{id++}));
  }
  for (std::int64_t i = 0; i < k; ++i) {
    const Scalar v(static_cast<long>(i));
    out.lines.push_back(canonicalize_line(Point2{0, v}, {Scalar(1), Scalar(0)}, LineId{id++}));
  }
  return out;
}

LineConfig generate_lines(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::grid: return grid_lines(spec.k);
    case GeneratorSpec::Kind::bush: return bush_lines(spec.k, spec.seed);
    case GeneratorSpec::Kind::random:
      return random_lines(spec.k, spec.seed, spec.bound ? spec.bound : kDefaultRandomLineBound);
    case GeneratorSpec::Kind::coplanar_pencil: return coplanar_pencil(spec.k);
    case GeneratorSpec::Kind::mixed: {
      std::vector<Line3> all;
      for (const auto& p : spec.parts) {
        const auto part = generate_lines(p);
        all.insert(all.end(), part.lines().begin(), part.lines().end());
      }
      return LineConfig::from_lines_renumbered(std::move(all), spec.to_string());
    }
    default: wrong_output(spec, "lines");
  }
}

std::vector<ParamCurve> generate_curves(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::curve_bush: return curve_bush(spec.k, spec.b, spec.seed);
    case GeneratorSpec::Kind::curve_grid: return curve_grid(spec.k);
    default: wrong_output(spec, "curves");
  }
}

PointSet generate_points(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorSpec::Kind::random && spec.kind != GeneratorSpec::Kind::points) {
    wrong_output(spec, "points");
  }
  return random_points(spec.k, spec.seed, spec.bound ? spec.bound : kDefaultRandomPointBound);
}

PlanarConfig generate_planar(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorSpec::Kind::planar_grid) wrong_output(spec, "a planar configuration");
  return planar_grid(spec.k);
}

}  // namespace joints
