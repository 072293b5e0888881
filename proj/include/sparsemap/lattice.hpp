#pragma once

// The unit lattice in R^n with its skeletal decomposition: lattice cells,
// axis-parallel m-planes and the geometric pieces simplex images are built from.

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sparsemap/error.hpp"

namespace sparsemap {

inline constexpr int kMaxAmbient = 8;

/// Point of R^n with dynamic size n <= kMaxAmbient and inline storage.
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxAmbient, 1>;

using LatticePoint = Vec<int>;
using RealPoint = Vec<double>;
using AxisMask = std::uint32_t;

inline AxisMask axis_bit(int a) { return AxisMask{1} << a; }
inline AxisMask all_axes(int n) { return (AxisMask{1} << n) - 1; }
inline int popcount(AxisMask m) { return __builtin_popcount(m); }
inline bool has_axis(AxisMask m, int a) { return (m >> a) & 1u; }

LatticePoint lattice_zero(int n);
RealPoint to_real(const LatticePoint& p);
/// Exact conversion; nullopt when some coordinate is not an integer.
std::optional<LatticePoint> to_lattice(const RealPoint& p);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// anchor + [0,1]^{axes}
struct CubicalCell {
  LatticePoint anchor;
  AxisMask axes = 0;

  int dim() const { return popcount(axes); }
  int ambient() const { return static_cast<int>(anchor.size()); }
  bool contains(const RealPoint& p) const;
  bool operator==(const CubicalCell& o) const { return axes == o.axes && anchor == o.anchor; }
};

bool operator<(const CubicalCell& a, const CubicalCell& b);

struct CellHash {
  std::size_t operator()(const CubicalCell& c) const noexcept;
};

/// Axis-parallel m-plane: the axes in `free` vary, every other axis is fixed
/// at the matching entry of `fixed`.  Free entries of `fixed` are kept at zero
/// so equal planes compare and hash equal.
class MPlane {
 public:
  MPlane() = default;
  MPlane(AxisMask free, const LatticePoint& through);

  int ambient() const { return static_cast<int>(fixed_.size()); }
  int dim() const { return popcount(free_); }
  AxisMask free_mask() const { return free_; }
  std::vector<int> free_axes() const;
  std::map<int, int> fixed_coords() const;
  int fixed(int axis) const { return fixed_[axis]; }

  bool contains(const CubicalCell& c) const;
  bool contains(const RealPoint& p) const;

  bool operator==(const MPlane& o) const { return free_ == o.free_ && fixed_ == o.fixed_; }
  friend bool operator<(const MPlane& a, const MPlane& b);

 private:
  friend struct PlaneHash;
  AxisMask free_ = 0;
  LatticePoint fixed_;
};

struct PlaneHash {
  std::size_t operator()(const MPlane& p) const noexcept;
};

using PlaneSet = std::unordered_set<MPlane, PlaneHash>;

/// Adds every m-plane containing `cell` whose free axes lie inside `allowed`.
void add_planes_containing(const CubicalCell& cell, int m, AxisMask allowed, PlaneSet& out);

/// Integer axis-aligned box; empty until the first extend().
struct BoundingBox {
  LatticePoint lo;
  LatticePoint hi;

  bool empty() const { return lo.size() == 0; }
  int ambient() const { return static_cast<int>(lo.size()); }
  void extend(const LatticePoint& p);
  void extend(const RealPoint& p);
  void extend(const BoundingBox& b);
  /// Largest extent hi - lo over the axes (0 when empty).
  int side() const;
  bool contains(const BoundingBox& inner) const;
  bool operator==(const BoundingBox& o) const { return lo == o.lo && hi == o.hi; }
};

/// Visits every lattice point of the box in lexicographic order (axis 0 slowest).
template <typename F>
void for_each_lattice_point(const BoundingBox& box, F&& f) {
  if (box.empty()) return;
  const int n = box.ambient();
  LatticePoint p = box.lo;
  while (true) {
    f(static_cast<const LatticePoint&>(p));
    int a = n - 1;
    while (a >= 0 && p[a] == box.hi[a]) {
      p[a] = box.lo[a];
      --a;
    }
    if (a < 0) return;
    ++p[a];
  }
}

class GeomPiece;
using PiecePtr = std::shared_ptr<const GeomPiece>;

struct Point {
  RealPoint at;
};

/// Lattice path; consecutive points differ by one unit step along one axis.
struct Polyline {
  std::vector<RealPoint> points;
};

struct CubicalChain {
  int n = 0;
  std::vector<CubicalCell> cells;
};

/// Sweep of `base` (lying in {x_axis = from}) along `axis` up to `to`, from <= to.
struct Prism {
  PiecePtr base;
  int axis = 0;
  int from = 0;
  int to = 0;
};

/// Union of segments from `apex` to the points of `base`; the apex lies on the base.
struct Cone {
  PiecePtr base;
  RealPoint apex;
};

class GeomPiece {
 public:
  using Variant = std::variant<Point, Polyline, CubicalChain, Prism, Cone>;

  GeomPiece(Point p) : v_(std::move(p)) {}
  GeomPiece(Polyline p) : v_(std::move(p)) {}
  GeomPiece(CubicalChain c) : v_(std::move(c)) {}
  GeomPiece(Prism p) : v_(std::move(p)) {}
  GeomPiece(Cone c) : v_(std::move(c)) {}

  const Variant& variant() const { return v_; }
  template <typename T>
  bool is() const { return std::holds_alternative<T>(v_); }
  template <typename T>
  const T& as() const { return std::get<T>(v_); }

  int ambient() const;
  /// Nominal dimension (Prism: base + 1 when from < to; Cone: base + 1).
  int dim() const;
  /// False when a cone occurs anywhere in the piece.
  bool exact() const;

 private:
  Variant v_;
};

PiecePtr share(GeomPiece p);

GeomPiece make_point(const LatticePoint& p);
/// Unit-step lattice path visiting `corners` in order, moving along axes in
/// increasing order between consecutive corners.
GeomPiece make_path(std::span<const LatticePoint> corners);
GeomPiece make_segment(const LatticePoint& from, const LatticePoint& to);

/// Expansion into lattice cells (top cells of polylines and prisms, all cells
/// of chains).  Pieces must be lattice pieces without cones.
std::vector<CubicalCell> lattice_cells(const GeomPiece& piece);

/// True when every point of the piece has coordinate `value` along `axis`.
bool lies_in_hyperplane(const GeomPiece& piece, int axis, int value);

/// Condition "image of a k-simplex lies in the k-skeleton" for one piece.
bool lies_in_skeleton(const GeomPiece& piece, int k);

/// Orthogonal projection onto {x_axis = value}.
GeomPiece project(const GeomPiece& piece, int axis, int value);
GeomPiece translate(const GeomPiece& piece, const LatticePoint& offset);

/// Swept chain between `piece` (in {x_axis = from}) and its translate at `to`.
GeomPiece prism_between(const GeomPiece& piece, int axis, int from, int to);

/// Cone from a point of the piece; a point coned from itself stays a point.
GeomPiece cone_over(const GeomPiece& piece, const RealPoint& apex);

/// All segments perpendicular to {x_axis = target} between the piece and its
/// projection, as prisms, paths and chains.
std::vector<GeomPiece> sweep_to(const GeomPiece& piece, int axis, int target);

/// Merges pieces into a single piece (a point when they all collapse to one point).
GeomPiece merge_pieces(std::span<const GeomPiece> pieces);

struct PlaneQuery {
  PlaneSet planes;
  bool exact = true;
};

/// m-planes meeting the piece in a set of dimension d, where "meeting in
/// dimension d" means containing a full d-cell of the piece.  Cones return a
/// superset: every m-plane containing the apex or some base cell.
/// Only planes whose free axes lie in `allowed` are considered.
PlaneQuery planes_hit_in_dim(const GeomPiece& piece, int m, int d,
                             AxisMask allowed = ~AxisMask{0});

BoundingBox bbox(const GeomPiece& piece);
BoundingBox bbox(std::span<const GeomPiece> pieces);

}  // namespace sparsemap
