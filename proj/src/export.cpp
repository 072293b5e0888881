#include "sparsemap/export.hpp"

#include <map>
#include <sstream>

#include "sparsemap/io.hpp"

namespace sparsemap {

namespace {

// straight segments and quads making up a piece, in real coordinates
struct Faces {
  std::vector<RealPoint> points;
  std::vector<std::pair<RealPoint, RealPoint>> segments;
  std::vector<std::vector<RealPoint>> polygons;
};

std::vector<RealPoint> cell_corners(const CubicalCell& c) {
  // corners in cyclic order for 2-cells
  const RealPoint a = to_real(c.anchor);
  std::vector<int> axes;
  for (int i = 0; i < c.ambient(); ++i)
    if (has_axis(c.axes, i)) axes.push_back(i);
  if (axes.empty()) return {a};
  RealPoint b = a;
  b[axes[0]] += 1;
  if (axes.size() == 1) return {a, b};
  RealPoint d = a;
  d[axes[1]] += 1;
  RealPoint e = b;
  e[axes[1]] += 1;
  return {a, b, e, d};
}

void collect(const GeomPiece& piece, Faces& out) {
  if (piece.is<Cone>()) {
    const auto& cone = piece.as<Cone>();
    Faces base;
    collect(*cone.base, base);
    out.segments.insert(out.segments.end(), base.segments.begin(), base.segments.end());
    for (const auto& p : base.points) out.segments.emplace_back(cone.apex, p);
    for (const auto& [a, b] : base.segments) out.polygons.push_back({cone.apex, a, b});
    return;
  }
  if (piece.is<Prism>() && !piece.exact()) {
    const auto& pr = piece.as<Prism>();
    for (int t = pr.from; t <= pr.to; ++t) {
      Faces layer;
      collect(project(*pr.base, pr.axis, t), layer);
      out.points.insert(out.points.end(), layer.points.begin(), layer.points.end());
      out.segments.insert(out.segments.end(), layer.segments.begin(), layer.segments.end());
    }
    return;
  }
  if (piece.is<Polyline>()) {
    const auto& pts = piece.as<Polyline>().points;
    if (pts.size() == 1) out.points.push_back(pts[0]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.segments.emplace_back(pts[i], pts[i + 1]);
    return;
  }
  if (piece.is<Point>()) {
    out.points.push_back(piece.as<Point>().at);
    return;
  }
  for (const auto& c : lattice_cells(piece)) {
    auto corners = cell_corners(c);
    if (corners.size() == 1) out.points.push_back(corners[0]);
    else if (corners.size() == 2) out.segments.emplace_back(corners[0], corners[1]);
    else if (corners.size() == 4) out.polygons.push_back(std::move(corners));
    else throw Error(Errc::UnsupportedDimension, "cells above dimension 2 cannot be exported");
  }
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

std::string to_svg(const LatticeMap& map) {
  const auto& box = map.achieved_box;
  const int lo0 = box.empty() ? 0 : box.lo[0], lo1 = box.empty() ? 0 : box.lo[1];
  const int w = box.empty() ? 1 : box.hi[0] - lo0 + 2, h = box.empty() ? 1 : box.hi[1] - lo1 + 2;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo0 - 1 << ' ' << lo1 - 1 << ' ' << w << ' ' << h
      << "\">\n";
  for (std::size_t i = 0; i < map.images.size(); ++i) {
    const auto& s = map.complex.simplex(i);
    Faces f;
    for (const auto& p : map.images[i]) collect(p, f);
    const std::string id = simplex_key(s);
    if (s.size() == 1) {
      for (const auto& p : f.points)
        out << "  <circle data-simplex=\"" << id << "\" cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
            << "\" r=\"0.15\"/>\n";
      continue;
    }
    out << "  <path data-simplex=\"" << id << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.08\" d=\"";
    bool first = true;
    for (const auto& [a, b] : f.segments) {
      out << (first ? "" : " ") << "M" << fmt(a[0]) << ',' << fmt(a[1]) << " L" << fmt(b[0]) << ',' << fmt(b[1]);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_obj(const LatticeMap& map) {
  std::ostringstream out;
  std::map<std::vector<double>, int> index;
  std::ostringstream body;
  auto vid = [&](const RealPoint& p) {
    std::vector<double> key(p.data(), p.data() + p.size());
    auto [it, fresh] = index.emplace(key, static_cast<int>(index.size()) + 1);
    if (fresh) out << "v " << fmt(p[0]) << ' ' << fmt(p[1]) << ' ' << fmt(p[2]) << '\n';
    return it->second;
  };
  for (std::size_t i = 0; i < map.images.size(); ++i) {
    Faces f;
    for (const auto& p : map.images[i]) collect(p, f);
    body << "g s" << simplex_key(map.complex.simplex(i)) << '\n';
    for (const auto& p : f.points) body << "p " << vid(p) << '\n';
    for (const auto& [a, b] : f.segments) body << "l " << vid(a) << ' ' << vid(b) << '\n';
    for (const auto& poly : f.polygons) {
      body << 'f';
      for (const auto& p : poly) body << ' ' << vid(p);
      body << '\n';
    }
  }
  return out.str() + body.str();
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
  if (name == "svg") return ExportFormat::svg;
  if (name == "obj") return ExportFormat::obj;
  if (name == "json") return ExportFormat::json;
  throw Error(Errc::InvalidArgument, "unknown export format " + name);
}

std::string export_map(const LatticeMap& map, ExportFormat format) {
  const int d = map.complex.dim();
  switch (format) {
    case ExportFormat::svg:
      if (map.n != 2 || d > 1) throw Error(Errc::UnsupportedDimension, "svg needs n = 2 and d <= 1");
      return to_svg(map);
    case ExportFormat::obj:
      if (map.n != 3 || d > 2) throw Error(Errc::UnsupportedDimension, "obj needs n = 3 and d <= 2");
      return to_obj(map);
    case ExportFormat::json:
      return map_to_json(map).dump(2) + "\n";
  }
  return {};
}

}  // namespace sparsemap
