#include "sparsemap/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sparsemap {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_axis(int axis, int n) {
  if (axis < 0 || axis >= n) throw Error(Errc::AxisOutOfRange, "axis " + std::to_string(axis));
}

LatticePoint require_lattice(const RealPoint& p) {
  auto q = to_lattice(p);
  if (!q) throw Error(Errc::InvalidArgument, "point is not a lattice point");
  return *q;
}

// Unit edge between consecutive polyline points, or nullopt for a non-unit step.
std::optional<CubicalCell> unit_edge(const RealPoint& a, const RealPoint& b) {
  auto pa = to_lattice(a), pb = to_lattice(b);
  if (!pa || !pb || pa->size() != pb->size()) return std::nullopt;
  int axis = -1;
  for (int i = 0; i < pa->size(); ++i) {
    const int diff = (*pb)[i] - (*pa)[i];
    if (diff == 0) continue;
    if (std::abs(diff) != 1 || axis >= 0) return std::nullopt;
    axis = i;
  }
  if (axis < 0) return std::nullopt;
  CubicalCell c{(*pa)[axis] < (*pb)[axis] ? *pa : *pb, axis_bit(axis)};
  return c;
}

void sort_unique(std::vector<CubicalCell>& cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

// Subsets of `pool` with exactly k bits.
template <typename F>
void for_each_subset(AxisMask pool, int k, F&& f) {
  if (k < 0 || k > popcount(pool)) return;
  if (k == 0) {
    f(AxisMask{0});
    return;
  }
  for (AxisMask s = pool;; s = (s - 1) & pool) {
    if (popcount(s) == k) f(s);
    if (s == 0) break;
  }
}

}  // namespace

LatticePoint lattice_zero(int n) { return LatticePoint::Zero(n); }

RealPoint to_real(const LatticePoint& p) { return p.cast<double>(); }

std::optional<LatticePoint> to_lattice(const RealPoint& p) {
  LatticePoint q(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const double r = std::round(p[i]);
    if (r != p[i] || std::abs(r) > 1e9) return std::nullopt;
    q[i] = static_cast<int>(r);
  }
  return q;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size());
  for (int i = 0; i < p.size(); ++i) h = mix(h, static_cast<std::size_t>(static_cast<std::uint32_t>(p[i])));
  return h;
}

bool CubicalCell::contains(const RealPoint& p) const {
  for (int i = 0; i < anchor.size(); ++i) {
    if (has_axis(axes, i)) {
      if (p[i] < anchor[i] || p[i] > anchor[i] + 1) return false;
    } else if (p[i] != anchor[i]) {
      return false;
    }
  }
  return true;
}

bool operator<(const CubicalCell& a, const CubicalCell& b) {
  if (a.axes != b.axes) return a.axes < b.axes;
  return std::lexicographical_compare(a.anchor.begin(), a.anchor.end(), b.anchor.begin(),
                                      b.anchor.end());
}

std::size_t CellHash::operator()(const CubicalCell& c) const noexcept {
  return mix(LatticePointHash{}(c.anchor), c.axes);
}

MPlane::MPlane(AxisMask free, const LatticePoint& through) : free_(free), fixed_(through) {
  for (int i = 0; i < fixed_.size(); ++i) {
    if (has_axis(free_, i)) fixed_[i] = 0;
  }
}

std::vector<int> MPlane::free_axes() const {
  std::vector<int> out;
  for (int i = 0; i < ambient(); ++i) {
    if (has_axis(free_, i)) out.push_back(i);
  }
  return out;
}

std::map<int, int> MPlane::fixed_coords() const {
  std::map<int, int> out;
  for (int i = 0; i < ambient(); ++i) {
    if (!has_axis(free_, i)) out[i] = fixed_[i];
  }
  return out;
}

bool MPlane::contains(const CubicalCell& c) const {
  if ((c.axes & ~free_) != 0) return false;
  for (int i = 0; i < ambient(); ++i) {
    if (!has_axis(free_, i) && c.anchor[i] != fixed_[i]) return false;
  }
  return true;
}

bool MPlane::contains(const RealPoint& p) const {
  for (int i = 0; i < ambient(); ++i) {
    if (!has_axis(free_, i) && p[i] != fixed_[i]) return false;
  }
  return true;
}

bool operator<(const MPlane& a, const MPlane& b) {
  if (a.free_ != b.free_) return a.free_ < b.free_;
  return std::lexicographical_compare(a.fixed_.begin(), a.fixed_.end(), b.fixed_.begin(),
                                      b.fixed_.end());
}

std::size_t PlaneHash::operator()(const MPlane& p) const noexcept {
  return mix(LatticePointHash{}(p.fixed_), p.free_);
}

void add_planes_containing(const CubicalCell& cell, int m, AxisMask allowed, PlaneSet& out) {
  const int n = cell.ambient();
  allowed &= all_axes(n);
  if ((cell.axes & ~allowed) != 0) return;
  const AxisMask pool = allowed & ~cell.axes;
  for_each_subset(pool, m - cell.dim(), [&](AxisMask extra) {
    out.insert(MPlane(cell.axes | extra, cell.anchor));
  });
}

void BoundingBox::extend(const LatticePoint& p) {
  if (empty()) {
    lo = p;
    hi = p;
    return;
  }
  lo = lo.cwiseMin(p);
  hi = hi.cwiseMax(p);
}

void BoundingBox::extend(const RealPoint& p) {
  LatticePoint f(p.size()), c(p.size());
  for (int i = 0; i < p.size(); ++i) {
    f[i] = static_cast<int>(std::floor(p[i]));
    c[i] = static_cast<int>(std::ceil(p[i]));
  }
  extend(f);
  extend(c);
}

void BoundingBox::extend(const BoundingBox& b) {
  if (b.empty()) return;
  extend(b.lo);
  extend(b.hi);
}

int BoundingBox::side() const {
  if (empty()) return 0;
  return (hi - lo).maxCoeff();
}

bool BoundingBox::contains(const BoundingBox& inner) const {
  if (inner.empty()) return true;
  if (empty()) return false;
  return (inner.lo.array() >= lo.array()).all() && (inner.hi.array() <= hi.array()).all();
}

int GeomPiece::ambient() const {
  return std::visit(Overloaded{
                        [](const Point& p) { return static_cast<int>(p.at.size()); },
                        [](const Polyline& p) {
                          return p.points.empty() ? 0 : static_cast<int>(p.points[0].size());
                        },
                        [](const CubicalChain& c) { return c.n; },
                        [](const Prism& p) { return p.base->ambient(); },
                        [](const Cone& c) { return static_cast<int>(c.apex.size()); },
                    },
                    v_);
}

int GeomPiece::dim() const {
  return std::visit(Overloaded{
                        [](const Point&) { return 0; },
                        [](const Polyline& p) { return p.points.size() > 1 ? 1 : 0; },
                        [](const CubicalChain& c) {
                          int d = -1;
                          for (const auto& cell : c.cells) d = std::max(d, cell.dim());
                          return d;
                        },
                        [](const Prism& p) { return p.base->dim() + (p.from < p.to ? 1 : 0); },
                        [](const Cone& c) { return c.base->dim() + 1; },
                    },
                    v_);
}

bool GeomPiece::exact() const {
  if (is<Cone>()) return false;
  if (is<Prism>()) return as<Prism>().base->exact();
  return true;
}

PiecePtr share(GeomPiece p) { return std::make_shared<const GeomPiece>(std::move(p)); }

GeomPiece make_point(const LatticePoint& p) { return Point{to_real(p)}; }

GeomPiece make_path(std::span<const LatticePoint> corners) {
  Polyline line;
  if (corners.empty()) return line;
  LatticePoint cur = corners[0];
  line.points.push_back(to_real(cur));
  for (std::size_t k = 1; k < corners.size(); ++k) {
    const LatticePoint& target = corners[k];
    for (int a = 0; a < cur.size(); ++a) {
      while (cur[a] != target[a]) {
        cur[a] += cur[a] < target[a] ? 1 : -1;
        line.points.push_back(to_real(cur));
      }
    }
  }
  if (line.points.size() == 1) return Point{line.points[0]};
  return line;
}

GeomPiece make_segment(const LatticePoint& from, const LatticePoint& to) {
  const LatticePoint corners[] = {from, to};
  return make_path(corners);
}

std::vector<CubicalCell> lattice_cells(const GeomPiece& piece) {
  return std::visit(
      Overloaded{
          [](const Point& p) { return std::vector<CubicalCell>{{require_lattice(p.at), 0}}; },
          [](const Polyline& p) {
            std::vector<CubicalCell> out;
            if (p.points.size() == 1) {
              out.push_back({require_lattice(p.points[0]), 0});
              return out;
            }
            for (std::size_t i = 1; i < p.points.size(); ++i) {
              auto e = unit_edge(p.points[i - 1], p.points[i]);
              if (!e) throw Error(Errc::InvalidArgument, "polyline step is not a unit lattice edge");
              out.push_back(*e);
            }
            sort_unique(out);
            return out;
          },
          [](const CubicalChain& c) {
            auto out = c.cells;
            sort_unique(out);
            return out;
          },
          [](const Prism& p) {
            std::vector<CubicalCell> out;
            const auto base = lattice_cells(*p.base);
            if (p.from == p.to) return base;
            for (const auto& c : base) {
              if (has_axis(c.axes, p.axis)) {
                out.push_back(c);
                continue;
              }
              for (int h = p.from; h < p.to; ++h) {
                CubicalCell swept{c.anchor, c.axes | axis_bit(p.axis)};
                swept.anchor[p.axis] = h;
                out.push_back(swept);
              }
            }
            sort_unique(out);
            return out;
          },
          [](const Cone&) -> std::vector<CubicalCell> {
            throw Error(Errc::InvalidArgument, "cones have no lattice cell decomposition");
          },
      },
      piece.variant());
}

bool lies_in_hyperplane(const GeomPiece& piece, int axis, int value) {
  return std::visit(
      Overloaded{
          [&](const Point& p) { return p.at[axis] == value; },
          [&](const Polyline& p) {
            return std::all_of(p.points.begin(), p.points.end(),
                               [&](const RealPoint& q) { return q[axis] == value; });
          },
          [&](const CubicalChain& c) {
            return std::all_of(c.cells.begin(), c.cells.end(), [&](const CubicalCell& cell) {
              return !has_axis(cell.axes, axis) && cell.anchor[axis] == value;
            });
          },
          [&](const Prism& p) {
            if (p.axis == axis) return p.from == p.to && p.from == value;
            return lies_in_hyperplane(*p.base, axis, value);
          },
          [&](const Cone& c) { return c.apex[axis] == value && lies_in_hyperplane(*c.base, axis, value); },
      },
      piece.variant());
}

namespace {

bool all_lattice(const GeomPiece& piece) {
  return std::visit(Overloaded{
                        [](const Point& p) { return to_lattice(p.at).has_value(); },
                        [](const Polyline& p) {
                          if (p.points.empty()) return false;
                          if (p.points.size() == 1) return to_lattice(p.points[0]).has_value();
                          for (std::size_t i = 1; i < p.points.size(); ++i) {
                            if (!unit_edge(p.points[i - 1], p.points[i])) return false;
                          }
                          return true;
                        },
                        [](const CubicalChain&) { return true; },
                        [](const Prism& p) { return p.from <= p.to && all_lattice(*p.base); },
                        [](const Cone& c) {
                          return to_lattice(c.apex).has_value() && all_lattice(*c.base);
                        },
                    },
                    piece.variant());
}

}  // namespace

bool lies_in_skeleton(const GeomPiece& piece, int k) {
  if (!all_lattice(piece)) return false;
  if (const auto* prism = std::get_if<Prism>(&piece.variant())) {
    if (!lies_in_hyperplane(*prism->base, prism->axis, prism->from)) return false;
  }
  if (const auto* cone = std::get_if<Cone>(&piece.variant())) {
    if (!cone->base->exact()) return false;
    const auto base = lattice_cells(*cone->base);
    const LatticePoint apex = *to_lattice(cone->apex);
    bool on_base = false;
    for (const auto& c : base) {
      AxisMask span = c.axes;
      for (int a = 0; a < apex.size(); ++a) {
        if (!has_axis(c.axes, a) && apex[a] != c.anchor[a]) span |= axis_bit(a);
      }
      if (popcount(span) > k) return false;
      on_base = on_base || c.contains(cone->apex);
    }
    return on_base;
  }
  for (const auto& c : lattice_cells(piece)) {
    if (c.dim() > k) return false;
  }
  return true;
}

GeomPiece project(const GeomPiece& piece, int axis, int value) {
  require_axis(axis, piece.ambient());
  return std::visit(
      Overloaded{
          [&](const Point& p) -> GeomPiece {
            Point q = p;
            q.at[axis] = value;
            return q;
          },
          [&](const Polyline& p) -> GeomPiece {
            Polyline q;
            for (RealPoint pt : p.points) {
              pt[axis] = value;
              if (q.points.empty() || q.points.back() != pt) q.points.push_back(pt);
            }
            if (q.points.size() == 1) return Point{q.points[0]};
            return q;
          },
          [&](const CubicalChain& c) -> GeomPiece {
            CubicalChain q{c.n, {}};
            q.cells.reserve(c.cells.size());
            for (CubicalCell cell : c.cells) {
              cell.axes &= ~axis_bit(axis);
              cell.anchor[axis] = value;
              q.cells.push_back(cell);
            }
            sort_unique(q.cells);
            return q;
          },
          [&](const Prism& p) -> GeomPiece {
            if (p.axis == axis) return project(*p.base, axis, value);
            return Prism{share(project(*p.base, axis, value)), p.axis, p.from, p.to};
          },
          [&](const Cone& c) -> GeomPiece {
            RealPoint apex = c.apex;
            apex[axis] = value;
            return cone_over(project(*c.base, axis, value), apex);
          },
      },
      piece.variant());
}

GeomPiece translate(const GeomPiece& piece, const LatticePoint& offset) {
  const RealPoint shift = to_real(offset);
  return std::visit(
      Overloaded{
          [&](const Point& p) -> GeomPiece { return Point{p.at + shift}; },
          [&](const Polyline& p) -> GeomPiece {
            Polyline q = p;
            for (auto& pt : q.points) pt += shift;
            return q;
          },
          [&](const CubicalChain& c) -> GeomPiece {
            CubicalChain q = c;
            for (auto& cell : q.cells) cell.anchor += offset;
            return q;
          },
          [&](const Prism& p) -> GeomPiece {
            return Prism{share(translate(*p.base, offset)), p.axis, p.from + offset[p.axis],
                         p.to + offset[p.axis]};
          },
          [&](const Cone& c) -> GeomPiece {
            return Cone{share(translate(*c.base, offset)), c.apex + shift};
          },
      },
      piece.variant());
}

GeomPiece prism_between(const GeomPiece& piece, int axis, int from, int to) {
  require_axis(axis, piece.ambient());
  if (!lies_in_hyperplane(piece, axis, from)) {
    throw Error(Errc::PieceNotInHyperplane, "prism base is not in {x_" + std::to_string(axis) +
                                                " = " + std::to_string(from) + "}");
  }
  if (from == to) return piece;
  if (const auto* p = std::get_if<Point>(&piece.variant())) {
    Polyline line;
    RealPoint cur = p->at;
    line.points.push_back(cur);
    const int step = from < to ? 1 : -1;
    for (int h = from; h != to; h += step) {
      cur[axis] += step;
      line.points.push_back(cur);
    }
    return line;
  }
  if (from < to) return Prism{share(piece), axis, from, to};
  return Prism{share(project(piece, axis, to)), axis, to, from};
}

GeomPiece cone_over(const GeomPiece& piece, const RealPoint& apex) {
  if (apex.size() != piece.ambient()) throw Error(Errc::ApexNotOnPiece, "apex has wrong ambient dimension");
  if (piece.is<Point>()) {
    if (piece.as<Point>().at != apex) throw Error(Errc::ApexNotOnPiece, "apex differs from the point");
    return piece;
  }
  bool on = false;
  if (piece.exact()) {
    for (const auto& c : lattice_cells(piece)) {
      if (c.contains(apex)) {
        on = true;
        break;
      }
    }
  } else {
    on = true;  // nested cones: the projected apex of a cone stays on its projected base
  }
  if (!on) throw Error(Errc::ApexNotOnPiece, "apex is not a point of the base");
  return Cone{share(piece), apex};
}

std::vector<GeomPiece> sweep_to(const GeomPiece& piece, int axis, int target) {
  require_axis(axis, piece.ambient());
  std::vector<GeomPiece> out;
  std::visit(
      Overloaded{
          [&](const Point& p) {
            out.push_back(prism_between(piece, axis, static_cast<int>(p.at[axis]), target));
          },
          [&](const Polyline& p) {
            if (p.points.size() == 1) {
              out.push_back(prism_between(Point{p.points[0]}, axis, static_cast<int>(p.points[0][axis]), target));
              return;
            }
            std::size_t i = 0;
            const std::size_t last = p.points.size() - 1;
            while (i < last) {
              const bool along = p.points[i][axis] != p.points[i + 1][axis];
              std::size_t j = i;
              while (j < last && (p.points[j][axis] != p.points[j + 1][axis]) == along) ++j;
              if (along) {
                // collinear run along the sweep axis: one segment from its far end
                const RealPoint& a = p.points[i];
                const RealPoint& b = p.points[j];
                const RealPoint& far =
                    std::abs(a[axis] - target) >= std::abs(b[axis] - target) ? a : b;
                out.push_back(prism_between(Point{far}, axis, static_cast<int>(far[axis]), target));
              } else {
                Polyline run;
                run.points.assign(p.points.begin() + static_cast<long>(i),
                                  p.points.begin() + static_cast<long>(j) + 1);
                out.push_back(prism_between(run, axis, static_cast<int>(run.points[0][axis]), target));
              }
              i = j;
            }
          },
          [&](const CubicalChain& c) {
            std::map<int, CubicalChain> levels;
            CubicalChain spanning{c.n, {}};
            for (const auto& cell : c.cells) {
              if (!has_axis(cell.axes, axis)) {
                auto& group = levels[cell.anchor[axis]];
                group.n = c.n;
                group.cells.push_back(cell);
                continue;
              }
              const int lo = std::min(target, cell.anchor[axis]);
              const int hi = std::max(target, cell.anchor[axis] + 1);
              for (int h = lo; h < hi; ++h) {
                CubicalCell swept = cell;
                swept.anchor[axis] = h;
                spanning.cells.push_back(swept);
              }
            }
            for (auto& [level, group] : levels) out.push_back(prism_between(group, axis, level, target));
            if (!spanning.cells.empty()) {
              sort_unique(spanning.cells);
              out.push_back(std::move(spanning));
            }
          },
          [&](const Prism& p) {
            if (p.axis == axis) {
              if (target < p.from) {
                out.push_back(Prism{share(project(*p.base, axis, target)), axis, target, p.to});
              } else if (target > p.to) {
                out.push_back(Prism{p.base, axis, p.from, target});
              } else {
                out.push_back(piece);
              }
              return;
            }
            for (const auto& s : sweep_to(*p.base, axis, target)) {
              out.push_back(prism_between(s, p.axis, p.from, p.to));
            }
          },
          [&](const Cone& c) {
            const int level = static_cast<int>(c.apex[axis]);
            if (!lies_in_hyperplane(piece, axis, level)) {
              throw Error(Errc::InvalidArgument, "sweeping a cone that is not in a hyperplane");
            }
            out.push_back(prism_between(piece, axis, level, target));
          },
      },
      piece.variant());
  return out;
}

GeomPiece merge_pieces(std::span<const GeomPiece> pieces) {
  if (pieces.empty()) throw Error(Errc::InvalidArgument, "merging no pieces");
  const int n = pieces[0].ambient();
  std::vector<CubicalCell> cells;
  for (const auto& p : pieces) {
    auto c = lattice_cells(p);
    cells.insert(cells.end(), c.begin(), c.end());
  }
  sort_unique(cells);
  if (cells.size() == 1 && cells[0].dim() == 0) return Point{to_real(cells[0].anchor)};
  return CubicalChain{n, std::move(cells)};
}

PlaneQuery planes_hit_in_dim(const GeomPiece& piece, int m, int d, AxisMask allowed) {
  const int n = piece.ambient();
  if (d < 0 || d > m || m > n) throw Error(Errc::InvalidArgument, "need 0 <= d <= m <= n");
  if (piece.dim() != d) {
    throw Error(Errc::DimensionMismatch, "piece has dimension " + std::to_string(piece.dim()) +
                                             ", query dimension " + std::to_string(d));
  }
  PlaneQuery q;
  const auto* cone = std::get_if<Cone>(&piece.variant());
  if (!piece.exact() && !(cone && cone->base->exact())) {
    // cone nested in a prism or cone: every plane through a lattice point of the box
    q.exact = false;
    for_each_lattice_point(bbox(piece), [&](const LatticePoint& p) {
      add_planes_containing(CubicalCell{p, 0}, m, allowed, q.planes);
    });
    return q;
  }
  if (cone) {
    q.exact = false;
    add_planes_containing(CubicalCell{require_lattice(cone->apex), 0}, m, allowed, q.planes);
    for (const auto& c : lattice_cells(*cone->base)) add_planes_containing(c, m, allowed, q.planes);
    return q;
  }
  if (const auto* prism = std::get_if<Prism>(&piece.variant()); prism && prism->from < prism->to) {
    for (const auto& c : lattice_cells(*prism->base)) {
      if (c.dim() != d - 1 || has_axis(c.axes, prism->axis)) continue;
      add_planes_containing(CubicalCell{c.anchor, c.axes | axis_bit(prism->axis)}, m, allowed,
                            q.planes);
    }
    return q;
  }
  for (const auto& c : lattice_cells(piece)) {
    if (c.dim() == d) add_planes_containing(c, m, allowed, q.planes);
  }
  return q;
}

BoundingBox bbox(const GeomPiece& piece) {
  BoundingBox box;
  std::visit(Overloaded{
                 [&](const Point& p) { box.extend(p.at); },
                 [&](const Polyline& p) {
                   for (const auto& pt : p.points) box.extend(pt);
                 },
                 [&](const CubicalChain& c) {
                   for (const auto& cell : c.cells) {
                     box.extend(cell.anchor);
                     LatticePoint far = cell.anchor;
                     for (int a = 0; a < far.size(); ++a) {
                       if (has_axis(cell.axes, a)) ++far[a];
                     }
                     box.extend(far);
                   }
                 },
                 [&](const Prism& p) {
                   box = bbox(*p.base);
                   if (!box.empty()) {
                     box.lo[p.axis] = std::min(box.lo[p.axis], p.from);
                     box.hi[p.axis] = std::max(box.hi[p.axis], p.to);
                   }
                 },
                 [&](const Cone& c) {
                   box = bbox(*c.base);
                   box.extend(c.apex);
                 },
             },
             piece.variant());
  return box;
}

BoundingBox bbox(std::span<const GeomPiece> pieces) {
  BoundingBox box;
  for (const auto& p : pieces) box.extend(bbox(p));
  return box;
}

}  // namespace sparsemap
