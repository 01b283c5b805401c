#include "joints/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "joints/error.hpp"
#include "json.hpp"

namespace joints {

using nlohmann::json;

Config Config::of(LineConfig lines) {
  Config c;
  c.kind = Kind::lines;
  c.provenance = lines.provenance();
  c.lines = std::move(lines);
  return c;
}

Config Config::of(std::vector<ParamCurve> curves, std::string provenance) {
  Config c;
  c.kind = Kind::curves;
  c.provenance = std::move(provenance);
  c.curves = std::move(curves);
  return c;
}

Config Config::of(PointSet points) {
  Config c;
  c.kind = Kind::points;
  c.provenance = points.id;
  c.points = std::move(points);
  return c;
}

Config Config::of(PlanarConfig planar, std::string provenance) {
  Config c;
  c.kind = Kind::planar;
  c.provenance = std::move(provenance);
  c.planar = std::move(planar);
  return c;
}

const char* kind_name(Config::Kind kind) {
  switch (kind) {
    case Config::Kind::lines: return "lines";
    case Config::Kind::curves: return "curves";
    case Config::Kind::points: return "points";
    case Config::Kind::planar: return "planar";
  }
  return "?";
}

Config generate_config(const GeneratorSpec& spec, Config::Kind preferred) {
  if (spec.kind == GeneratorSpec::Kind::points ||
      (spec.kind == GeneratorSpec::Kind::random && preferred == Config::Kind::points)) {
    auto pts = generate_points(spec);
    pts.id = spec.to_string();
    return Config::of(std::move(pts));
  }
  if (spec.yields_lines()) {
    auto lines = generate_lines(spec);
    return Config::of(LineConfig::from_lines(lines.lines(), spec.to_string()));
  }
  if (spec.yields_curves()) return Config::of(generate_curves(spec), spec.to_string());
  return Config::of(generate_planar(spec), spec.to_string());
}

// ---------------------------------------------------------------- writing

namespace {

json scalar_json(const Scalar& s) { return to_string(s); }

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json point_json(const Point3& p) { return json::array({scalar_json(p.x), scalar_json(p.y), scalar_json(p.z)}); }

json poly_json(const UniPoly& p) {
  json arr = json::array();
  if (p.is_zero()) arr.push_back("0");
  for (const auto& c : p.coefficients()) arr.push_back(scalar_json(c));
  return arr;
}

// Top level is indented; each record stays on one line.
void emit_records(std::ostringstream& os, const std::string& key, const std::vector<json>& records,
                  bool last) {
  os << "  \"" << key << "\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ") << records[i].dump();
  }
  os << (records.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

}  // namespace

std::string serialize_config(const Config& config) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << json(kConfigFormat).dump() << ",\n";
  os << "  \"kind\": " << json(kind_name(config.kind)).dump() << ",\n";
  os << "  \"provenance\": " << json(config.provenance).dump() << ",\n";
  auto line_record = [](const Line3& l) {
    json r = json::object();
    r["id"] = l.id.value;
    r["point"] = point_json(l.base);
    r["dir"] = json::array({integer_json(l.dir[0]), integer_json(l.dir[1]), integer_json(l.dir[2])});
    return r;
  };
  switch (config.kind) {
    case Config::Kind::lines: {
      std::vector<json> recs;
      for (const auto& l : config.lines.lines()) recs.push_back(line_record(l));
      emit_records(os, "lines", recs, true);
      break;
    }
    case Config::Kind::curves: {
      os << "  \"curves\": [";
      for (std::size_t i = 0; i < config.curves.size(); ++i) {
        const auto& c = config.curves[i];
        os << (i == 0 ? "\n    " : ",\n    ") << "{\"id\":" << c.id().value
           << ",\"degree_bound\":" << c.degree_bound() << ",\"x\":" << poly_json(c.coord(0)).dump()
           << ",\"y\":" << poly_json(c.coord(1)).dump() << ",\"z\":" << poly_json(c.coord(2)).dump()
           << "}";
      }
      os << (config.curves.empty() ? "]\n" : "\n  ]\n");
      break;
    }
    case Config::Kind::points: {
      std::vector<json> recs;
      for (const auto& p : config.points.points) recs.push_back(point_json(p));
      emit_records(os, "points", recs, true);
      break;
    }
    case Config::Kind::planar: {
      std::vector<json> pts;
      for (const auto& p : config.planar.points) {
        pts.push_back(json::array({scalar_json(p.x), scalar_json(p.y)}));
      }
      emit_records(os, "points", pts, false);
      std::vector<json> lines;
      for (const auto& l : config.planar.lines) {
        json r = json::object();
        r["id"] = l.id.value;
        r["point"] = json::array({scalar_json(l.base.x), scalar_json(l.base.y)});
        r["dir"] = json::array({integer_json(l.dir[0]), integer_json(l.dir[1])});
        lines.push_back(std::move(r));
      }
      emit_records(os, "lines", lines, true);
      break;
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------- reading

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(source_ + ": at " + (pointer.empty() ? "/" : pointer) + ": " + what);
  }

  const json& field(const json& obj, const std::string& pointer, const std::string& key) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, "missing key \"" + key + "\"");
    return *it;
  }

  const json& array(const json& v, const std::string& pointer, std::size_t size = 0) const {
    if (!v.is_array()) fail(pointer, "expected an array");
    if (size != 0 && v.size() != size) {
      fail(pointer, "expected " + std::to_string(size) + " elements, got " + std::to_string(v.size()));
    }
    return v;
  }

  Scalar scalar(const json& v, const std::string& pointer) const {
    if (v.is_number_integer()) return Scalar(v.dump());
    if (v.is_number_float()) fail(pointer, "floating-point literal; write rationals as \"p/q\" strings");
    if (!v.is_string()) fail(pointer, "expected a rational string");
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      fail(pointer, e.what());
    }
  }

  Integer integer(const json& v, const std::string& pointer) const {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      Integer out;
      if (!s.empty() && out.set_str(s, 10) == 0) return out;
    }
    fail(pointer, "expected an integer");
  }

  std::uint32_t id(const json& v, const std::string& pointer) const {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
      fail(pointer, "expected a non-negative 32-bit id");
    }
    return static_cast<std::uint32_t>(v.get<std::uint64_t>());
  }

  Point3 point3(const json& v, const std::string& pointer) const {
    array(v, pointer, 3);
    return Point3(scalar(v[0], pointer + "/0"), scalar(v[1], pointer + "/1"),
                  scalar(v[2], pointer + "/2"));
  }

  UniPoly poly(const json& v, const std::string& pointer) const {
    array(v, pointer);
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(scalar(v[i], pointer + "/" + std::to_string(i)));
    return UniPoly(std::move(c));
  }

 private:
  std::string source_;
};

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

Config parse_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(source + ":" + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
  Reader rd(source);
  const auto& format = rd.field(doc, "", "format");
  if (!format.is_string() || format.get<std::string>() != kConfigFormat) {
    rd.fail("/format", std::string("expected \"") + kConfigFormat + "\"");
  }
  const auto& kind = rd.field(doc, "", "kind");
  std::string provenance;
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_string()) rd.fail("/provenance", "expected a string");
    provenance = it->get<std::string>();
  }
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";

  try {
    if (k == "lines") {
      const auto& arr = rd.array(rd.field(doc, "", "lines"), "/lines");
      std::vector<Line3> lines;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ptr = "/lines/" + std::to_string(i);
        const auto& rec = arr[i];
        const auto id = rd.id(rd.field(rec, ptr, "id"), ptr + "/id");
        const auto pt = rd.point3(rd.field(rec, ptr, "point"), ptr + "/point");
        const auto& dj = rd.array(rd.field(rec, ptr, "dir"), ptr + "/dir", 3);
        std::array<Scalar, 3> dir;
        for (int a = 0; a < 3; ++a) {
          dir[static_cast<std::size_t>(a)] =
              Scalar(rd.integer(dj[static_cast<std::size_t>(a)], ptr + "/dir/" + std::to_string(a)));
        }
        try {
          lines.push_back(canonicalize_line(pt, dir, LineId{id}));
        } catch (const ZeroDirection& e) {
          rd.fail(ptr + "/dir", e.what());
        }
      }
      return Config::of(LineConfig::from_lines(std::move(lines), provenance));
    }
    if (k == "curves") {
      const auto& arr = rd.array(rd.field(doc, "", "curves"), "/curves");
      std::vector<ParamCurve> curves;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ptr = "/curves/" + std::to_string(i);
        const auto& rec = arr[i];
        const auto id = rd.id(rd.field(rec, ptr, "id"), ptr + "/id");
        const auto& bj = rd.field(rec, ptr, "degree_bound");
        if (!bj.is_number_unsigned()) rd.fail(ptr + "/degree_bound", "expected a positive integer");
        std::array<UniPoly, 3> coords{rd.poly(rd.field(rec, ptr, "x"), ptr + "/x"),
                                      rd.poly(rd.field(rec, ptr, "y"), ptr + "/y"),
                                      rd.poly(rd.field(rec, ptr, "z"), ptr + "/z")};
        try {
          curves.emplace_back(std::move(coords), bj.get<unsigned>(), CurveId{id});
        } catch (const InvalidArgument& e) {
          rd.fail(ptr, e.what());
        }
      }
      return Config::of(std::move(curves), provenance);
    }
    if (k == "points") {
      const auto& arr = rd.array(rd.field(doc, "", "points"), "/points");
      PointSet ps;
      ps.id = provenance;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        ps.points.push_back(rd.point3(arr[i], "/points/" + std::to_string(i)));
      }
      return Config::of(std::move(ps));
    }
    if (k == "planar") {
      PlanarConfig pc;
      const auto& pts = rd.array(rd.field(doc, "", "points"), "/points");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string ptr = "/points/" + std::to_string(i);
        rd.array(pts[i], ptr, 2);
        pc.points.push_back(Point2{rd.scalar(pts[i][0], ptr + "/0"), rd.scalar(pts[i][1], ptr + "/1")});
      }
      const auto& lines = rd.array(rd.field(doc, "", "lines"), "/lines");
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string ptr = "/lines/" + std::to_string(i);
        const auto& rec = lines[i];
        const auto id = rd.id(rd.field(rec, ptr, "id"), ptr + "/id");
        const auto& pj = rd.array(rd.field(rec, ptr, "point"), ptr + "/point", 2);
        const auto& dj = rd.array(rd.field(rec, ptr, "dir"), ptr + "/dir", 2);
        const Point2 p{rd.scalar(pj[0], ptr + "/point/0"), rd.scalar(pj[1], ptr + "/point/1")};
        const std::array<Scalar, 2> d{Scalar(rd.integer(dj[0], ptr + "/dir/0")),
                                      Scalar(rd.integer(dj[1], ptr + "/dir/1"))};
        try {
          pc.lines.push_back(canonicalize_line(p, d, LineId{id}));
        } catch (const ZeroDirection& e) {
          rd.fail(ptr + "/dir", e.what());
        }
      }
      return Config::of(std::move(pc), provenance);
    }
  } catch (const InvalidArgument& e) {
    rd.fail("", e.what());
  }
  rd.fail("/kind", "expected one of \"lines\", \"curves\", \"points\", \"planar\"");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << text;
  if (!out) throw ParseError(path + ": write failed");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

}  // namespace joints
