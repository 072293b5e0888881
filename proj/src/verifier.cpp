#include "sparsemap/verifier.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sparsemap {

void LatticeMap::recompute_box() {
  achieved_box = BoundingBox{};
  for (const auto& pieces : images) achieved_box.extend(bbox(pieces));
}

namespace {

std::map<int, int> histogram_of(const std::vector<int>& counts) {
  std::map<int, int> h;
  for (int c : counts) {
    if (c > 0) ++h[c];
  }
  return h;
}

}  // namespace

SparsityCertificate verify(const LatticeMap& map) {
  SparsityCertificate cert;
  const auto& Y = map.complex;
  for (const auto& pieces : map.images) cert.box.extend(bbox(pieces));
  if (Y.empty()) return cert;
  if (map.images.size() != Y.size()) {
    cert.skeletal_ok = false;
    return cert;
  }

  std::vector<bool> piece_ok(Y.size(), true);
  for (std::size_t i = 0; i < Y.size(); ++i) {
    const int k = simplex_dim(Y.simplex(i));
    if (map.images[i].empty()) piece_ok[i] = false;
    for (const auto& piece : map.images[i]) {
      if (piece.ambient() != map.n || !lies_in_skeleton(piece, k)) piece_ok[i] = false;
    }
    if (!piece_ok[i]) cert.skeletal_ok = false;
  }

  const int d = Y.dim();
  if (d > map.m || map.m > map.n) return cert;
  std::unordered_map<MPlane, int, PlaneHash> per_plane;
  for (std::size_t i : Y.of_dim(d)) {
    if (!piece_ok[i]) continue;
    PlaneSet planes;
    for (const auto& piece : map.images[i]) {
      if (piece.dim() != d) continue;
      auto q = planes_hit_in_dim(piece, map.m, d);
      if (!q.exact) cert.conservative = true;
      planes.merge(q.planes);
    }
    cert.max_planes_per_simplex = std::max(cert.max_planes_per_simplex, static_cast<int>(planes.size()));
    for (const auto& h : planes) ++per_plane[h];
  }
  std::vector<int> counts;
  counts.reserve(per_plane.size());
  for (const auto& [h, c] : per_plane) {
    counts.push_back(c);
    cert.max_simplices_per_plane = std::max(cert.max_simplices_per_plane, c);
  }
  cert.per_plane_histogram = histogram_of(counts);
  return cert;
}

namespace {

// ---- brute-force oracle: shares only the unit-cell decomposition with verify ----

struct RasterCone {
  std::vector<std::vector<RealPoint>> cell_samples;  // per base cell, samples of conv(apex, cell)
};

struct OracleImage {
  std::vector<CubicalCell> cells;
  std::vector<RasterCone> cones;
  bool lattice = true;
};

constexpr int kRasterSteps = 4;  // resolution 1/4

std::vector<RealPoint> sample_cell(const CubicalCell& c) {
  std::vector<RealPoint> out;
  const int n = c.ambient();
  std::vector<int> axes;
  for (int a = 0; a < n; ++a) {
    if (has_axis(c.axes, a)) axes.push_back(a);
  }
  std::vector<int> idx(axes.size(), 0);
  while (true) {
    RealPoint p = to_real(c.anchor);
    for (std::size_t i = 0; i < axes.size(); ++i) p[axes[i]] += static_cast<double>(idx[i]) / kRasterSteps;
    out.push_back(p);
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == kRasterSteps) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return out;
}

RasterCone rasterize_cone(const Cone& cone) {
  RasterCone r;
  for (const auto& c : lattice_cells(*cone.base)) {
    std::vector<RealPoint> samples;
    for (const auto& x : sample_cell(c)) {
      for (int t = 0; t <= kRasterSteps; ++t) {
        const double s = static_cast<double>(t) / kRasterSteps;
        samples.push_back(cone.apex + s * (x - cone.apex));
      }
    }
    r.cell_samples.push_back(std::move(samples));
  }
  return r;
}

// Number of non-integer coordinates of a point: a point lies in the k-skeleton
// of the lattice iff at most k of its coordinates are fractional.
int fractional_coords(const RealPoint& p) {
  int k = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] != std::floor(p[i])) ++k;
  }
  return k;
}

bool oracle_collect(const GeomPiece& piece, int k, OracleImage& img) {
  if (const auto* cone = std::get_if<Cone>(&piece.variant())) {
    if (!to_lattice(cone->apex) || !cone->base->exact()) return false;
    bool base_ok = true;
    try {
      auto r = rasterize_cone(*cone);
      for (const auto& samples : r.cell_samples) {
        for (const auto& s : samples) {
          if (fractional_coords(s) > k) base_ok = false;
        }
      }
      img.cones.push_back(std::move(r));
    } catch (const Error&) {
      return false;
    }
    bool apex_on_base = false;
    for (const auto& c : lattice_cells(*cone->base)) apex_on_base = apex_on_base || c.contains(cone->apex);
    return base_ok && apex_on_base;
  }
  if (const auto* prism = std::get_if<Prism>(&piece.variant())) {
    if (prism->from > prism->to || !lies_in_hyperplane(*prism->base, prism->axis, prism->from)) return false;
  }
  std::vector<CubicalCell> cells;
  try {
    cells = lattice_cells(piece);
  } catch (const Error&) {
    return false;
  }
  bool ok = true;
  for (const auto& c : cells) {
    for (const auto& s : sample_cell(c)) {
      if (fractional_coords(s) > k) ok = false;
    }
  }
  img.cells.insert(img.cells.end(), cells.begin(), cells.end());
  return ok;
}

// Dimension of plane ∩ cell from first principles, -1 when empty.
int intersect_dim(const MPlane& h, const CubicalCell& c) {
  int dim = 0;
  for (int a = 0; a < c.ambient(); ++a) {
    const bool free = has_axis(h.free_mask(), a);
    const bool spans = has_axis(c.axes, a);
    if (free) {
      if (spans) ++dim;
      continue;
    }
    const int v = h.fixed(a);
    if (spans) {
      if (v < c.anchor[a] || v > c.anchor[a] + 1) return -1;
    } else if (v != c.anchor[a]) {
      return -1;
    }
  }
  return dim;
}

int affine_rank(const std::vector<RealPoint>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  Eigen::MatrixXd diffs(pts[0].size(), static_cast<Eigen::Index>(pts.size() - 1));
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.col(static_cast<Eigen::Index>(i - 1)) = pts[i] - pts[0];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

int intersect_dim(const MPlane& h, const RasterCone& cone) {
  int best = -1;
  for (const auto& samples : cone.cell_samples) {
    std::vector<RealPoint> inside;
    for (const auto& s : samples) {
      if (h.contains(s)) inside.push_back(s);
    }
    best = std::max(best, affine_rank(inside));
  }
  return best;
}

BoundingBox oracle_box(const std::vector<OracleImage>& images, int n) {
  BoundingBox box;
  for (const auto& img : images) {
    for (const auto& c : img.cells) {
      box.extend(c.anchor);
      LatticePoint far = c.anchor;
      for (int a = 0; a < n; ++a) far[a] += has_axis(c.axes, a) ? 1 : 0;
      box.extend(far);
    }
    for (const auto& cone : img.cones) {
      for (const auto& samples : cone.cell_samples) {
        for (const auto& s : samples) box.extend(s);
      }
    }
  }
  return box;
}

}  // namespace

SparsityCertificate brute_force_census(const LatticeMap& map, int max_side) {
  SparsityCertificate cert;
  const auto& Y = map.complex;
  if (Y.empty()) return cert;
  const int n = map.n, m = map.m, d = Y.dim();

  std::vector<OracleImage> images(Y.size());
  std::vector<bool> ok(Y.size(), true);
  for (std::size_t i = 0; i < Y.size() && i < map.images.size(); ++i) {
    const int k = simplex_dim(Y.simplex(i));
    if (map.images[i].empty()) ok[i] = false;
    for (const auto& piece : map.images[i]) {
      if (piece.ambient() != n || !oracle_collect(piece, k, images[i])) ok[i] = false;
    }
    if (!ok[i]) cert.skeletal_ok = false;
  }
  if (map.images.size() != Y.size()) cert.skeletal_ok = false;
  cert.box = oracle_box(images, n);
  if (cert.box.side() > max_side) {
    throw Error(Errc::BoxTooLarge, "box side " + std::to_string(cert.box.side()) + " exceeds " +
                                       std::to_string(max_side));
  }
  if (cert.box.empty() || d > m || m > n) return cert;

  const auto tops = Y.of_dim(d);
  std::vector<int> planes_per_simplex(Y.size(), 0);
  std::vector<int> per_plane;
  for (AxisMask F = 0; F < (AxisMask{1} << n); ++F) {
    if (popcount(F) != m) continue;
    BoundingBox fixed_range = cert.box;
    for (int a = 0; a < n; ++a) {
      if (has_axis(F, a)) fixed_range.lo[a] = fixed_range.hi[a] = 0;
    }
    for_each_lattice_point(fixed_range, [&](const LatticePoint& p) {
      const MPlane h(F, p);
      int hits = 0;
      for (std::size_t i : tops) {
        if (!ok[i]) continue;
        int best = -1;
        for (const auto& c : images[i].cells) best = std::max(best, intersect_dim(h, c));
        for (const auto& cone : images[i].cones) best = std::max(best, intersect_dim(h, cone));
        if (best == d) {
          ++hits;
          ++planes_per_simplex[i];
        }
      }
      per_plane.push_back(hits);
      cert.max_simplices_per_plane = std::max(cert.max_simplices_per_plane, hits);
    });
  }
  for (std::size_t i : tops) cert.max_planes_per_simplex = std::max(cert.max_planes_per_simplex, planes_per_simplex[i]);
  cert.per_plane_histogram = histogram_of(per_plane);
  return cert;
}

int unit_ball_census(const LatticeMap& map) {
  std::unordered_map<LatticePoint, int, LatticePointHash> count;
  int best = 0;
  for (const auto& pieces : map.images) {
    std::unordered_set<LatticePoint, LatticePointHash> touched;
    for (const auto& piece : pieces) {
      if (!piece.exact()) {
        for_each_lattice_point(bbox(piece), [&](const LatticePoint& p) { touched.insert(p); });
        continue;
      }
      for (const auto& c : lattice_cells(piece)) {
        // lattice points of a unit cell are its corners
        for (AxisMask s = c.axes;; s = (s - 1) & c.axes) {
          LatticePoint p = c.anchor;
          for (int a = 0; a < p.size(); ++a) p[a] += has_axis(s, a) ? 1 : 0;
          touched.insert(p);
          if (s == 0) break;
        }
      }
    }
    for (const auto& p : touched) best = std::max(best, ++count[p]);
  }
  return best;
}

}  // namespace sparsemap
