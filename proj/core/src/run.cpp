#include "joints/run.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "joints/curves.hpp"
#include "joints/error.hpp"
#include "joints/generators.hpp"
#include "joints/incidence.hpp"
#include "joints/io.hpp"
#include "joints/joints.hpp"
#include "joints/oracle.hpp"
#include "joints/partition.hpp"
#include "json.hpp"

#ifndef JOINTS_VERSION
#define JOINTS_VERSION "0.0.0"
#endif

namespace joints {

using ojson = nlohmann::ordered_json;

const char* tool_version() { return JOINTS_VERSION; }

namespace {

constexpr std::size_t kOracleLineLimit = 400;

class Stopwatch {
 public:
  void lap(ojson& timings, const char* name) {
    const auto now = std::chrono::steady_clock::now();
    timings[name] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ojson point_json(const Point3& p) { return ojson::array({to_string(p.x), to_string(p.y), to_string(p.z)}); }

ojson dir_json(const Direction3& d) {
  ojson arr = ojson::array();
  for (int a = 0; a < 3; ++a) {
    if (d[a].fits_slong_p()) {
      arr.push_back(d[a].get_si());
    } else {
      arr.push_back(d[a].get_str());
    }
  }
  return arr;
}

void put_real(ojson& obj, const std::string& key, const Real& v) {
  obj[key] = to_double(v);
  obj[key + "_decimal"] = format_real(v);
}

struct Verification {
  bool performed = false;
  std::vector<std::string> issues;
  std::string note;

  ojson to_json() const {
    ojson v;
    v["performed"] = performed;
    v["passed"] = issues.empty();
    v["issues"] = issues;
    if (!note.empty()) v["note"] = note;
    return v;
  }
};

bool seeded(const GeneratorSpec& g) {
  using K = GeneratorSpec::Kind;
  if (g.kind == K::mixed) return std::any_of(g.parts.begin(), g.parts.end(), seeded);
  return g.kind == K::bush || g.kind == K::random || g.kind == K::points || g.kind == K::curve_bush;
}

// Fills report["input"] and starts report["seeds"] with the generator seed.
Config load_input(const RunOptions& opt, Config::Kind preferred, ojson& report) {
  ojson input;
  report["input"] = ojson::object();
  report["seeds"] = ojson::object();
  if (opt.gen.has_value() == opt.input.has_value()) {
    throw InvalidArgument("exactly one of --gen and --input is required");
  }
  Config config;
  if (opt.gen) {
    const auto spec = parse_generator(*opt.gen, opt.seed);
    config = generate_config(spec, preferred);
    input["source"] = "gen:" + spec.to_string();
    if (seeded(spec)) report["seeds"]["generator"] = spec.seed;
  } else {
    config = parse_config(read_text_file(*opt.input), *opt.input);
    input["source"] = "file:" + *opt.input;
  }
  input["kind"] = kind_name(config.kind);
  input["digest"] = "sha256:" + sha256_hex(serialize_config(config));
  report["input"] = input;
  return config;
}

[[noreturn]] void wrong_kind(const Config& c, const std::string& command, const std::string& want) {
  throw InvalidArgument(command + " needs " + want + " input, got " + kind_name(c.kind));
}

ojson header(const RunOptions& opt) {
  ojson r;
  r["report"] = kReportFormat;
  r["command"] = opt.command;
  r["tool_version"] = tool_version();
  return r;
}

// ------------------------------------------------------------------ joints

RunResult run_joints(const RunOptions& opt) {
  ojson report = header(opt);
  ojson timings;
  Stopwatch sw;
  const Config config = load_input(opt, Config::Kind::lines, report);
  if (config.kind != Config::Kind::lines) wrong_kind(config, "joints", "lines");
  sw.lap(timings, "load");

  const auto& lines = config.lines;
  const auto joints = detect_joints(lines);
  sw.lap(timings, "detect");
  const auto bound = bound_report(lines, joints);
  const auto stats = dyadic_stats(joints);

  if (opt.format == "csv") {
    std::ostringstream os;
    os << "lambda,mu,count\n";
    for (const auto& [key, members] : stats.buckets) {
      os << key.lambda << ',' << key.mu << ',' << members.size() << '\n';
    }
    return RunResult{os.str(), false};
  }

  ojson result;
  result["lines"] = bound.lines;
  result["warnings"] = lines.warnings();
  result["joint_count"] = bound.joint_count;
  put_real(result, "weighted_sum", bound.weighted_sum);
  put_real(result, "rhs", bound.rhs);
  put_real(result, "ratio", bound.ratio);
  std::uint64_t max_n = 0;
  for (const auto& j : joints) max_n = std::max(max_n, j.multiplicity);
  result["max_multiplicity"] = max_n;
  ojson dyadic = ojson::array();
  for (const auto& [key, members] : stats.buckets) {
    dyadic.push_back({{"lambda", key.lambda}, {"mu", key.mu}, {"count", members.size()}});
  }
  result["dyadic"] = dyadic;
  if (opt.n || opt.k) {
    if (!(opt.n && opt.k)) throw InvalidArgument("--n and --k must be given together");
    const auto cls = proposition12_report(lines, joints, *opt.n, *opt.k);
    ojson c;
    c["N"] = *opt.n;
    c["k"] = *opt.k;
    c["class_size"] = cls.class_size;
    put_real(c, "lhs", cls.lhs);
    put_real(c, "term1", cls.term1);
    put_real(c, "term2", cls.term2);
    result["dyadic_class"] = c;
  }
  ojson list = ojson::array();
  for (const auto& j : joints) {
    ojson ids = ojson::array();
    for (auto id : j.incident_line_ids) ids.push_back(id.value);
    list.push_back({{"location", point_json(j.location)},
                    {"k", j.k_count},
                    {"N", j.multiplicity},
                    {"lines", ids}});
  }
  result["joints"] = list;
  report["result"] = result;

  Verification v;
  if (opt.verify) {
    if (lines.size() > kOracleLineLimit) {
      v.note = "oracle skipped: more than " + std::to_string(kOracleLineLimit) + " lines";
    } else {
      v.performed = true;
      const auto ref = oracle::brute_force_joints(lines.lines());
      v.issues = oracle::compare(joints, ref);
    }
    sw.lap(timings, "verify");
  }
  report["verification"] = v.to_json();
  if (opt.timings) report["timings_ms"] = timings;
  return RunResult{report.dump(2) + "\n", !v.issues.empty()};
}

// --------------------------------------------------------------- partition

RunResult run_partition(const RunOptions& opt) {
  ojson report = header(opt);
  ojson timings;
  Stopwatch sw;
  const Config config = load_input(opt, Config::Kind::points, report);
  if (config.kind != Config::Kind::points) wrong_kind(config, "partition", "points");
  const double d = opt.degree.value_or(4.0);
  report["seeds"]["partition"] = opt.seed;
  sw.lap(timings, "load");

  const auto part = guth_katz_partition(config.points, d, opt.seed, opt.max_iter);
  sw.lap(timings, "partition");

  ojson result;
  result["points"] = config.points.points.size();
  result["degree_budget"] = d;
  result["max_iter"] = opt.max_iter;
  result["J"] = part.J;
  result["schedule"] = part.schedule;
  ojson steps = ojson::array();
  for (const auto& s : part.steps) {
    ojson counts = ojson::array();
    for (const auto& c : s.per_set_counts) {
      counts.push_back({{"positive", c.positive}, {"negative", c.negative}, {"zero", c.zero}});
    }
    steps.push_back({{"degree_budget", s.degree_budget},
                     {"degree", s.poly.degree()},
                     {"converged", s.converged},
                     {"iterations", s.iterations},
                     {"polynomial", s.poly.to_string()},
                     {"per_set_counts", counts}});
  }
  result["steps"] = steps;
  result["product_degree"] = part.product_poly.degree();
  const auto& a = part.audit;
  result["audit"] = {{"nonempty_cells", a.nonempty_cells},
                     {"max_cell_count", a.max_cell_count},
                     {"z_bucket_count", a.z_bucket_count},
                     {"degree_used", a.degree_used},
                     {"target_cells", a.target_cells},
                     {"all_converged", a.all_converged},
                     {"cell_constant", a.cell_constant},
                     {"occupancy_constant", a.occupancy_constant}};
  std::map<std::string, std::size_t> cells;
  for (const auto& as : part.assignments) {
    if (const auto* sv = std::get_if<SignVector>(&as)) ++cells[sv->to_string()];
  }
  ojson cell_list = ojson::array();
  for (const auto& [signs, count] : cells) cell_list.push_back({{"signs", signs}, {"count", count}});
  result["cells"] = cell_list;
  report["result"] = result;

  Verification v;
  if (opt.verify) {
    v.performed = true;
    v.issues = verify_partition(config.points, part);
    sw.lap(timings, "verify");
  }
  report["verification"] = v.to_json();
  if (opt.timings) report["timings_ms"] = timings;
  return RunResult{report.dump(2) + "\n", !v.issues.empty()};
}

// ------------------------------------------------------------------ curves

std::vector<std::string> verify_curve_joints(std::span<const ParamCurve> curves,
                                             const CurveJoints& found) {
  std::vector<std::string> issues;
  std::map<CurveId, const ParamCurve*> by_id;
  for (const auto& c : curves) by_id[c.id()] = &c;
  for (const auto& j : found.joints) {
    std::ostringstream where;
    where << j.location;
    for (const auto& [id, t] : j.tangent_set.contributing) {
      if (!(by_id.at(id)->at(t) == j.location)) {
        issues.push_back("curve #" + std::to_string(id.value) + " misses " + where.str());
      }
    }
    const auto& d = j.tangent_set.directions;
    std::uint64_t n = 0;
    for (std::size_t a = 0; a < d.size(); ++a) {
      for (std::size_t b = a + 1; b < d.size(); ++b) {
        for (std::size_t c = b + 1; c < d.size(); ++c) {
          if (triple_spans(d[a], d[b], d[c])) ++n;
        }
      }
    }
    if (n != j.multiplicity) issues.push_back("multiplicity recount differs at " + where.str());
  }
  // Degree-one families are line configurations: cross-check with the oracle.
  const bool all_lines = std::all_of(curves.begin(), curves.end(),
                                     [](const ParamCurve& c) { return c.degree() <= 1; });
  if (all_lines && curves.size() <= kOracleLineLimit) {
    std::vector<Line3> lines;
    for (const auto& c : curves) {
      lines.push_back(canonicalize_line(c.at(0), {c.coord(0).coeff(1), c.coord(1).coeff(1),
                                                   c.coord(2).coeff(1)},
                                        LineId{c.id().value}));
    }
    const auto ref = oracle::brute_force_joints(lines);
    std::vector<JointRecord> as_records;
    for (const auto& j : found.joints) {
      JointRecord r;
      r.location = j.location;
      std::set<LineId> ids;
      for (const auto& [id, t] : j.tangent_set.contributing) ids.insert(LineId{id.value});
      r.incident_line_ids.assign(ids.begin(), ids.end());
      r.k_count = ids.size();
      r.multiplicity = j.multiplicity;
      as_records.push_back(std::move(r));
    }
    for (auto& issue : oracle::compare(as_records, ref)) issues.push_back(std::move(issue));
  }
  return issues;
}

RunResult run_curves(const RunOptions& opt) {
  ojson report = header(opt);
  ojson timings;
  Stopwatch sw;
  Config config = load_input(opt, Config::Kind::curves, report);
  if (config.kind == Config::Kind::lines) {
    std::vector<ParamCurve> curves;
    for (const auto& l : config.lines.lines()) curves.push_back(ParamCurve::from_line(l, CurveId{l.id.value}));
    config = Config::of(std::move(curves), config.provenance);
  }
  if (config.kind != Config::Kind::curves) wrong_kind(config, "curves", "curves or lines");
  sw.lap(timings, "load");

  const auto found = detect_curve_joints(config.curves);
  sw.lap(timings, "detect");
  const auto bound = curve_bound_report(config.curves, found);

  ojson result;
  result["curves"] = bound.curves;
  result["joint_count"] = bound.joint_count;
  put_real(result, "weighted_sum", bound.weighted_sum);
  put_real(result, "rhs", bound.rhs);
  put_real(result, "ratio", bound.ratio);
  result["complete"] = bound.complete;
  result["flagged_pairs"] = bound.flagged_pairs;
  ojson list = ojson::array();
  for (const auto& j : found.joints) {
    ojson dirs = ojson::array();
    for (const auto& d : j.tangent_set.directions) dirs.push_back(dir_json(d));
    ojson contributing = ojson::array();
    for (const auto& [id, t] : j.tangent_set.contributing) {
      contributing.push_back({{"curve", id.value}, {"t", to_string(t)}});
    }
    list.push_back({{"location", point_json(j.location)},
                    {"N", j.multiplicity},
                    {"directions", dirs},
                    {"contributing", contributing}});
  }
  result["joints"] = list;
  report["result"] = result;

  Verification v;
  if (opt.verify) {
    v.performed = true;
    v.issues = verify_curve_joints(config.curves, found);
    sw.lap(timings, "verify");
  }
  report["verification"] = v.to_json();
  if (opt.timings) report["timings_ms"] = timings;
  return RunResult{report.dump(2) + "\n", !v.issues.empty()};
}

// -------------------------------------------------------------- incidences

ojson st_json(const SzemerediTrotterReport& st) {
  ojson o;
  o["incidences"] = st.incidences;
  put_real(o, "bound", st.bound);
  put_real(o, "ratio", st.ratio);
  if (st.projection) {
    ojson dir = ojson::array();
    for (const auto& c : st.projection->direction) dir.push_back(c.get_si());
    o["projection"] = {{"direction", dir}, {"rejections", st.projection->rejections}};
  }
  return o;
}

RunResult run_incidences(const RunOptions& opt) {
  ojson report = header(opt);
  ojson timings;
  Stopwatch sw;
  const Config config = load_input(opt, Config::Kind::planar, report);
  sw.lap(timings, "load");

  ojson result;
  Verification v;
  if (config.kind == Config::Kind::planar) {
    const auto& pc = config.planar;
    const auto st = st_report(pc.points, pc.lines);
    result["points"] = pc.points.size();
    result["lines"] = pc.lines.size();
    result["szemeredi_trotter"] = st_json(st);
    if (opt.verify) {
      v.performed = true;
      std::uint64_t direct = 0;
      for (const auto& p : pc.points) {
        for (const auto& l : pc.lines) {
          // (p - base) parallel to dir
          if ((p.x - l.base.x) * Scalar(l.dir[1]) == (p.y - l.base.y) * Scalar(l.dir[0])) ++direct;
        }
      }
      if (direct != st.incidences) {
        v.issues.push_back("incidence recount " + std::to_string(direct) + " != " +
                           std::to_string(st.incidences));
      }
    }
  } else if (config.kind == Config::Kind::lines) {
    report["seeds"]["projection"] = opt.seed;
    const auto& lines = config.lines.lines();
    const std::uint64_t k = opt.k.value_or(3);
    const auto rich = rich_points_report(lines, k);
    result["lines"] = lines.size();
    result["k"] = k;
    result["rich_points"] = rich.rich_points;
    result["quadratic_term"] = to_string(rich.quadratic_term);
    result["linear_term"] = to_string(rich.linear_term);
    std::vector<Point3> points;
    for (const auto& [p, members] : concurrency_points(lines)) points.push_back(p);
    result["intersection_points"] = points.size();
    const auto st = st_report(points, lines, opt.seed);
    result["szemeredi_trotter"] = st_json(st);
    if (opt.verify) {
      v.performed = true;
      const auto direct = count_incidences(points, lines);
      if (direct != st.incidences) {
        v.issues.push_back("spatial incidences " + std::to_string(direct) +
                           " != projected " + std::to_string(st.incidences));
      }
    }
  } else {
    wrong_kind(config, "incidences", "planar or lines");
  }
  sw.lap(timings, "count");
  report["result"] = result;
  report["verification"] = v.to_json();
  if (opt.timings) report["timings_ms"] = timings;
  return RunResult{report.dump(2) + "\n", !v.issues.empty()};
}

// ---------------------------------------------------------------- generate

// With --input, re-emits the file in canonical form.
RunResult run_generate(const RunOptions& opt) {
  ojson unused;
  const auto config = load_input(opt, Config::Kind::lines, unused);
  return RunResult{serialize_config(config), false};
}

}  // namespace

RunResult run(const RunOptions& opt) {
  if (opt.format != "json" && opt.format != "csv") {
    throw InvalidArgument("--format must be json or csv");
  }
  if (opt.format == "csv" && opt.command != "joints") {
    throw InvalidArgument("--format csv is only available for joints (dyadic histogram)");
  }
  if (opt.max_iter < 1) throw InvalidArgument("--max-iter must be positive");
  if (opt.command == "joints") return run_joints(opt);
  if (opt.command == "partition") return run_partition(opt);
  if (opt.command == "curves") return run_curves(opt);
  if (opt.command == "incidences") return run_incidences(opt);
  if (opt.command == "generate") return run_generate(opt);
  throw InvalidArgument("unknown command '" + opt.command + "'");
}

}  // namespace joints
