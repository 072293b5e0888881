#include "sparsemap/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sparsemap {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

json number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 1e15) return static_cast<long long>(x);
  return x;
}

json point_to_json(const RealPoint& p) {
  json a = json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(number(p[i]));
  return a;
}

json point_to_json(const LatticePoint& p) {
  json a = json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p[i]);
  return a;
}

RealPoint real_from_json(const json& j) {
  if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(kMaxAmbient)) fail("bad coordinate array");
  RealPoint p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail("coordinate is not a number");
    p[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return p;
}

LatticePoint lattice_from_json(const json& j) {
  if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(kMaxAmbient)) fail("bad coordinate array");
  LatticePoint p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail("lattice coordinate is not an integer");
    p[static_cast<Eigen::Index>(i)] = j[i].get<int>();
  }
  return p;
}

json axes_to_json(AxisMask m) {
  json a = json::array();
  for (int i = 0; i < 32; ++i)
    if (has_axis(m, i)) a.push_back(i);
  return a;
}

AxisMask axes_from_json(const json& j, int n) {
  if (!j.is_array()) fail("axes must be an array");
  AxisMask m = 0;
  for (const auto& a : j) {
    const int axis = a.get<int>();
    if (axis < 0 || axis >= n) fail("axis out of range");
    m |= axis_bit(axis);
  }
  return m;
}

// best rational with a modest denominator, exact in double
std::pair<long long, long long> to_rational(double x) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::fabs(a) > 1e15) break;
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > (1LL << 40)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (static_cast<double>(p1) / static_cast<double>(q1) == x) return {p1, q1};
    if (r == a) break;
    r = 1.0 / (r - a);
  }
  const long long den = 1LL << 52;
  return {std::llround(x * static_cast<double>(den)), den};
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

json complex_to_json(const SimplicialComplex& Y) {
  // a simplex is maximal when no simplex one dimension up contains it
  std::vector<bool> covered(Y.size(), false);
  for (std::size_t i = 0; i < Y.size(); ++i) {
    if (Y.simplex(i).size() < 2) continue;
    for (const auto& f : boundary(Y.simplex(i))) covered[static_cast<std::size_t>(Y.index_of(f))] = true;
  }
  json simplices = json::array();
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (!covered[i]) simplices.push_back(Y.simplex(i));
  return json{{"d", Y.dim()}, {"V", Y.vertex_count()}, {"simplices", simplices}};
}

SimplicialComplex complex_from_json(const json& j) {
  return guarded("complex", [&] {
    if (!j.is_object() || !j.contains("simplices")) fail("complex needs simplices");
    std::vector<Simplex> raw;
    for (const auto& s : j.at("simplices")) {
      if (!s.is_array()) fail("simplex must be an array");
      Simplex t;
      for (const auto& v : s) {
        if (!v.is_number_integer()) fail("vertex index must be an integer");
        t.push_back(v.get<int>());
      }
      raw.push_back(std::move(t));
    }
    const int V = j.value("V", -1);
    SimplicialComplex Y = build_complex(raw, V);
    if (j.contains("d") && j.at("d").get<int>() != Y.dim() && !Y.empty()) fail("declared d does not match simplices");
    return Y;
  });
}

json piece_to_json(const GeomPiece& p) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Point>) {
          return json{{"type", "point"}, {"at", point_to_json(v.at)}};
        } else if constexpr (std::is_same_v<T, Polyline>) {
          json pts = json::array();
          for (const auto& q : v.points) pts.push_back(point_to_json(q));
          return json{{"type", "polyline"}, {"points", pts}};
        } else if constexpr (std::is_same_v<T, CubicalChain>) {
          json cells = json::array();
          for (const auto& c : v.cells) cells.push_back(json{{"anchor", point_to_json(c.anchor)}, {"axes", axes_to_json(c.axes)}});
          return json{{"type", "chain"}, {"n", v.n}, {"cells", cells}};
        } else if constexpr (std::is_same_v<T, Prism>) {
          return json{{"type", "prism"}, {"base", piece_to_json(*v.base)}, {"axis", v.axis}, {"from", v.from}, {"to", v.to}};
        } else {
          return json{{"type", "cone"}, {"base", piece_to_json(*v.base)}, {"apex", point_to_json(v.apex)}};
        }
      },
      p.variant());
}

GeomPiece piece_from_json(const json& j) {
  return guarded("piece", [&]() -> GeomPiece {
    const std::string type = j.at("type").get<std::string>();
    if (type == "point") return Point{real_from_json(j.at("at"))};
    if (type == "polyline") {
      Polyline line;
      for (const auto& q : j.at("points")) line.points.push_back(real_from_json(q));
      if (line.points.empty()) fail("empty polyline");
      for (const auto& q : line.points)
        if (q.size() != line.points[0].size()) fail("mixed dimensions in polyline");
      return line;
    }
    if (type == "chain") {
      CubicalChain c;
      c.n = j.at("n").get<int>();
      if (c.n < 1 || c.n > kMaxAmbient) fail("chain dimension out of range");
      for (const auto& cell : j.at("cells")) {
        CubicalCell x{lattice_from_json(cell.at("anchor")), axes_from_json(cell.at("axes"), c.n)};
        if (x.ambient() != c.n) fail("cell dimension differs from chain");
        c.cells.push_back(std::move(x));
      }
      return c;
    }
    if (type == "prism") {
      Prism p{share(piece_from_json(j.at("base"))), j.at("axis").get<int>(), j.at("from").get<int>(), j.at("to").get<int>()};
      if (p.axis < 0 || p.axis >= p.base->ambient() || p.from > p.to) fail("bad prism");
      return p;
    }
    if (type == "cone") {
      Cone c{share(piece_from_json(j.at("base"))), real_from_json(j.at("apex"))};
      if (c.apex.size() != c.base->ambient()) fail("apex dimension differs from base");
      return c;
    }
    fail("unknown piece type " + type);
  });
}

json plane_to_json(const MPlane& h) {
  json fixed = json::object();
  for (const auto& [a, v] : h.fixed_coords()) fixed[std::to_string(a)] = v;
  return json{{"free", axes_to_json(h.free_mask())}, {"fixed", fixed}};
}

MPlane plane_from_json(const json& j, int n) {
  return guarded("plane", [&] {
    const AxisMask free = axes_from_json(j.at("free"), n);
    LatticePoint through = lattice_zero(n);
    int seen = 0;
    for (const auto& [key, value] : j.at("fixed").items()) {
      const int a = std::stoi(key);
      if (a < 0 || a >= n || has_axis(free, a)) fail("fixed axis invalid");
      through[a] = value.get<int>();
      ++seen;
    }
    if (seen + popcount(free) != n) fail("plane must fix every non-free axis");
    return MPlane(free, through);
  });
}

json box_to_json(const BoundingBox& b) {
  if (b.empty()) return json{{"lo", json::array()}, {"hi", json::array()}};
  return json{{"lo", point_to_json(b.lo)}, {"hi", point_to_json(b.hi)}};
}

BoundingBox box_from_json(const json& j) {
  return guarded("box", [&] {
    BoundingBox b;
    if (j.at("lo").empty()) return b;
    b.extend(lattice_from_json(j.at("lo")));
    b.extend(lattice_from_json(j.at("hi")));
    return b;
  });
}

json certificate_to_json(const SparsityCertificate& c) {
  json hist = json::object();
  for (const auto& [count, freq] : c.per_plane_histogram) hist[std::to_string(count)] = freq;
  return json{{"skeletal_ok", c.skeletal_ok},
              {"max_planes_per_simplex", c.max_planes_per_simplex},
              {"max_simplices_per_plane", c.max_simplices_per_plane},
              {"box", box_to_json(c.box)},
              {"conservative", c.conservative},
              {"per_plane_histogram", hist}};
}

SparsityCertificate certificate_from_json(const json& j) {
  return guarded("certificate", [&] {
    SparsityCertificate c;
    c.skeletal_ok = j.at("skeletal_ok").get<bool>();
    c.max_planes_per_simplex = j.at("max_planes_per_simplex").get<int>();
    c.max_simplices_per_plane = j.at("max_simplices_per_plane").get<int>();
    c.box = box_from_json(j.at("box"));
    c.conservative = j.at("conservative").get<bool>();
    for (const auto& [k, v] : j.at("per_plane_histogram").items()) c.per_plane_histogram[std::stoi(k)] = v.get<int>();
    return c;
  });
}

json level_log_to_json(const LevelLog& l) {
  return json{{"level", l.level},
              {"ambient", l.ambient},
              {"sparsity", l.sparsity},
              {"trial_constant", l.trial_constant},
              {"label_range", l.label_range},
              {"max_label", l.max_label},
              {"retries", l.retries},
              {"max_class_vertices", l.max_class_vertices},
              {"class_vertex_constant", l.class_vertex_constant},
              {"plane_growth", l.plane_growth},
              {"side_constant", l.side_constant}};
}

LevelLog level_log_from_json(const json& j) {
  return guarded("constants_log", [&] {
    LevelLog l;
    l.level = j.value("level", 0);
    l.ambient = j.value("ambient", 0);
    l.sparsity = j.value("sparsity", 0);
    l.trial_constant = j.value("trial_constant", 0.0);
    l.label_range = j.value("label_range", 0);
    l.max_label = j.value("max_label", 0);
    l.retries = j.value("retries", 0);
    l.max_class_vertices = j.value("max_class_vertices", 0);
    l.class_vertex_constant = j.value("class_vertex_constant", 0.0);
    l.plane_growth = j.value("plane_growth", 0.0);
    l.side_constant = j.value("side_constant", 0.0);
    return l;
  });
}

std::string simplex_key(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex simplex_from_key(const std::string& key) {
  Simplex s;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      fail("bad simplex key " + key);
    }
    if (used != part.size()) fail("bad simplex key " + key);
    s.push_back(v);
  }
  if (s.empty()) fail("empty simplex key");
  return s;
}

json map_to_json(const LatticeMap& map, const SparsityCertificate* certificate) {
  json images = json::object();
  for (std::size_t i = 0; i < map.images.size(); ++i) {
    json pieces = json::array();
    for (const auto& p : map.images[i]) pieces.push_back(piece_to_json(p));
    images[simplex_key(map.complex.simplex(i))] = pieces;
  }
  json logs = json::array();
  for (const auto& l : map.constants_log) logs.push_back(level_log_to_json(l));
  json out{{"n", map.n},       {"m", map.m}, {"box", box_to_json(map.achieved_box)}, {"images", images},
           {"constants_log", logs}, {"complex", complex_to_json(map.complex)}};
  if (certificate) out["certificate"] = certificate_to_json(*certificate);
  return out;
}

LatticeMap map_from_json(const json& j) {
  return guarded("embedding", [&] {
    LatticeMap map;
    map.n = j.at("n").get<int>();
    map.m = j.at("m").get<int>();
    if (map.n < 1 || map.n > kMaxAmbient || map.m < 0 || map.m > map.n) fail("bad n or m");
    const json& images = j.at("images");
    if (j.contains("complex")) {
      map.complex = complex_from_json(j.at("complex"));
    } else {
      std::vector<Simplex> raw;
      for (const auto& [key, value] : images.items()) raw.push_back(simplex_from_key(key));
      map.complex = build_complex(raw);
    }
    map.images.assign(map.complex.size(), {});
    for (const auto& [key, value] : images.items()) {
      const long idx = map.complex.index_of(simplex_from_key(key));
      if (idx < 0) fail("image for unknown simplex " + key);
      for (const auto& p : value) {
        GeomPiece piece = piece_from_json(p);
        if (piece.ambient() != map.n) fail("piece dimension differs from n");
        map.images[static_cast<std::size_t>(idx)].push_back(std::move(piece));
      }
    }
    if (j.contains("constants_log"))
      for (const auto& l : j.at("constants_log")) map.constants_log.push_back(level_log_from_json(l));
    map.recompute_box();
    return map;
  });
}

json placement_to_json(const VertexPlacement& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(point_to_json(c));
  return json{{"n", p.n}, {"m", p.m}, {"C", p.side_constant}, {"side", p.side}, {"coords", coords}};
}

VertexPlacement placement_from_json(const json& j) {
  return guarded("placement", [&] {
    VertexPlacement p;
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    p.side_constant = j.at("C").get<int>();
    p.side = j.value("side", 0);
    for (const auto& c : j.at("coords")) {
      p.coords.push_back(lattice_from_json(c));
      if (p.coords.back().size() != p.n) fail("coordinate dimension differs from n");
    }
    return p;
  });
}

json heights_to_json(const HeightFunction& h) {
  json values = json::object();
  for (std::size_t v = 0; v < h.values.size(); ++v) {
    const auto [num, den] = to_rational(h.values[v]);
    values[std::to_string(v)] = json::array({num, den});
  }
  return json{{"heights", values}};
}

HeightFunction heights_from_json(const json& j, int vertex_count) {
  return guarded("heights", [&] {
    HeightFunction h;
    h.values.assign(static_cast<std::size_t>(vertex_count), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    for (const auto& [key, value] : j.at("heights").items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= vertex_count) fail("height for unknown vertex " + key);
      double x = 0;
      if (value.is_array()) {
        if (value.size() != 2) fail("rational must be [num, den]");
        const double den = value[1].get<double>();
        if (den == 0) fail("zero denominator");
        x = value[0].get<double>() / den;
      } else {
        x = value.get<double>();
      }
      if (x < 0 || x > 1) fail("height outside [0, 1]");
      h.values[static_cast<std::size_t>(v)] = x;
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (bool s : seen)
      if (!s) fail("missing vertex height");
    return h;
  });
}

json width_report_to_json(const WidthReport& r) {
  return json{{"width", r.width},
              {"chunk_target", r.chunk_target},
              {"chunks", r.chunks},
              {"chunk_sizes", r.chunk_sizes},
              {"cube_side", r.cube_side},
              {"cube_constant", r.cube_constant},
              {"retries", r.retries},
              {"prism_length", r.prism_length},
              {"final_side", r.final_side},
              {"census_max", r.census_max},
              {"distortion", r.distortion},
              {"chunk_local", r.chunk_local},
              {"continuous", r.continuous},
              {"bridges", r.bridges},
              {"perturbation_factor", r.perturbation_factor},
              {"certificate", certificate_to_json(r.certificate)}};
}

}  // namespace sparsemap
