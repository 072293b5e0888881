#pragma once

// Extension of an (m-1)-sparse map of the (d-1)-skeleton to an m-sparse map of
// the whole complex: base case by projections and a cone, otherwise greedy
// labeling plus recursive fillings inside parallel hyperplanes.

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsemap/lattice_map.hpp"

namespace sparsemap {

/// Map of the skeleton Y(k) into R^n; images of simplices above dimension k are empty.
struct SkeletonMap {
  SimplicialComplex complex;
  int k = 0;
  int n = 0;
  /// declared sparsity of this map
  int m = 0;
  std::vector<std::vector<GeomPiece>> images;
};

/// Restriction of a full map to Y(k).
SkeletonMap restrict_to(const LatticeMap& map, int k);

/// Active axes (the last one is the label axis) and the point all other
/// coordinates are pinned to.
struct ExtensionFrame {
  std::vector<int> axes;
  LatticePoint origin;

  static ExtensionFrame standard(int n, int active);
  AxisMask mask() const;
  int size() const { return static_cast<int>(axes.size()); }
  ExtensionFrame drop_last(int height) const;
};

struct ExtensionOptions {
  /// R, the label range; 0 means ceil(V^{1/(n-m)})
  int label_range = 0;
  /// Number of leading axes in use (the image of f lies in {x_{active-1} = 0}); 0 means n.
  int active_axes = 0;
  /// seeded shuffle of the simplex order; input order when unset
  std::optional<std::uint64_t> order_seed;
  /// largest number of simplices the base case accepts
  int base_case_cap = 64;
};

struct Labeling {
  int R = 0;
  /// d-simplex indices in processing order with their labels
  std::vector<std::size_t> simplices;
  std::vector<int> labels;

  int label_of(std::size_t simplex) const;
  int max_label() const;
};

struct LabelClassComplex {
  int j = 0;
  /// disjoint union of the boundaries of the class, vertices renumbered
  SimplicialComplex domain;
  /// source d-simplex of every domain vertex
  std::vector<std::size_t> source;
  /// translated and projected map on the domain
  std::vector<std::vector<GeomPiece>> images;
  int vertex_count() const { return domain.vertex_count(); }
};

/// Fills the boundaries of all top simplices when the target sparsity equals n.
SkeletonMap fill_base_case(const SkeletonMap& f, const ExtensionOptions& options = {});

/// Greedy least-non-bad labels for the top simplices (target sparsity f.m + 1).
Labeling label_simplices(const SkeletonMap& f, int R, const ExtensionOptions& options = {});

/// Class j of the labeling, translated to height j and projected along the
/// second-to-last active axis.  Throws SparsityViolated when two simplices of
/// the class meet a common (m-1)-plane in dimension d-1.
LabelClassComplex build_label_class(const SkeletonMap& f, const Labeling& L, int j,
                                    const ExtensionOptions& options = {});

/// Extension to an (f.m + 1)-sparse map of all of Y.  Fills `log` when given.
SkeletonMap extend(const SkeletonMap& f, const ExtensionOptions& options = {},
                   LevelLog* log = nullptr);

// Lower-level pieces, exposed for testing.

/// One boundary to fill, in a frame.
struct FillingTask {
  std::vector<GeomPiece> boundary;
};

struct ExtensionStats {
  int max_label = 0;
  int max_class_vertices = 0;
  double plane_growth = 0;
};

/// Base-case filling of one boundary inside a frame of size m.
std::vector<GeomPiece> base_case_filling(const std::vector<GeomPiece>& boundary, int d,
                                         const ExtensionFrame& frame);

/// Labels tasks so that same-label boundaries share no m-plane (free axes in
/// the frame) in dimension d-1.
std::vector<int> label_tasks(const std::vector<FillingTask>& tasks, const ExtensionFrame& frame,
                             int m, int d, int R);

/// Fillings of every task, m-sparse in the frame.
std::vector<std::vector<GeomPiece>> fill_tasks(const std::vector<FillingTask>& tasks,
                                               const ExtensionFrame& frame, int m, int d, int R,
                                               int base_case_cap, ExtensionStats& stats);

}  // namespace sparsemap
