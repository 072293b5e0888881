#pragma once

#include <map>
#include <string>
#include <vector>

#include "sparsemap/complex.hpp"
#include "sparsemap/lattice.hpp"

namespace sparsemap {

/// Achieved constants of one construction level.
struct LevelLog {
  int level = 0;            // skeleton dimension being filled (0 = vertex placement)
  int ambient = 0;          // active ambient dimension
  int sparsity = 0;         // m at this level
  double trial_constant = 0;
  int label_range = 0;      // trial R
  int max_label = 0;        // largest label actually used, over the whole recursion
  int retries = 0;
  int max_class_vertices = 0;
  /// max_j |Y_j| / V^{(n-m-1)/(n-m)} at the outermost labeling
  double class_vertex_constant = 0;
  /// max over fillings of planes hit in dim d / planes hit in dim d-1 by the boundary
  double plane_growth = 0;
  /// achieved side / V^{1/(n-m)}
  double side_constant = 0;
};

/// A map F: Y -> R^n stored as per-simplex lists of pieces.
struct LatticeMap {
  SimplicialComplex complex;
  int n = 0;
  int m = 0;
  /// images[i] is the image of complex.simplex(i)
  std::vector<std::vector<GeomPiece>> images;
  BoundingBox achieved_box;
  std::vector<LevelLog> constants_log;

  void recompute_box();
};

}  // namespace sparsemap
