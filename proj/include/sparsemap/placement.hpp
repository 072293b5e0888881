#pragma once

// Greedy m-sparse placement of vertices: every m-plane holds at most one vertex.

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsemap/lattice.hpp"

namespace sparsemap {

struct PlacementConfig {
  int n = 2;
  int m = 1;
  int side_constant = 1;
  int vertex_count = 0;
  /// Explicit box side; computed as ceil(C * V^{1/(n-m)}) when unset.
  std::optional<int> side;
  /// Lower corner of the box.
  std::optional<LatticePoint> origin;

  int box_side() const;
};

/// Smallest integer C with binom(n, m) * C^m < C^n.
int min_constant(int n, int m);

/// Validated configuration with C = min_constant(n, m).
PlacementConfig make_placement_config(int n, int m, int vertex_count);

/// Total order on lattice points.  Lexicographic and seeded orders are
/// lexicographic on per-axis value ranks (seeded shuffles the ranks).  The
/// diagonal order sorts by (sum of offsets mod (side+1), then lexicographic), so
/// its first class meets every axis-parallel line of the box exactly once.
class TieBreak {
 public:
  static TieBreak lexicographic() { return TieBreak{}; }
  static TieBreak seeded(std::uint64_t seed) {
    TieBreak t;
    t.seed_ = seed;
    return t;
  }
  static TieBreak diagonal() {
    TieBreak t;
    t.diagonal_ = true;
    return t;
  }
  /// Values [0, side] of one axis in increasing order of preference.
  std::vector<int> axis_order(int axis, int side) const;
  bool is_lexicographic() const { return !seed_.has_value() && !diagonal_; }
  bool is_diagonal() const { return diagonal_; }

 private:
  std::optional<std::uint64_t> seed_;
  bool diagonal_ = false;
};

struct VertexPlacement {
  int n = 0;
  int m = 0;
  int side_constant = 0;
  int side = 0;
  std::vector<LatticePoint> coords;
  std::vector<std::pair<MPlane, int>> occupied_planes;
};

VertexPlacement greedy_place(int vertex_count, const PlacementConfig& config,
                             const TieBreak& tie_break = TieBreak::lexicographic());

/// Independent recheck: every m-plane through a placed point holds exactly one
/// placed point, and all points lie inside the configured box.
bool check_placement(const VertexPlacement& p, const PlacementConfig& config);

}  // namespace sparsemap
