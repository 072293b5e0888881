#pragma once

// Certification of the three sparse-map conditions, plus an exhaustive
// plane-enumeration oracle for small maps.

#include <map>

#include "sparsemap/lattice_map.hpp"

namespace sparsemap {

struct SparsityCertificate {
  bool skeletal_ok = true;
  int max_planes_per_simplex = 0;
  int max_simplices_per_plane = 0;
  BoundingBox box;
  /// True iff a cone's over-approximated plane set contributed.
  bool conservative = false;
  /// number of top simplices met in top dimension -> number of planes with that count
  std::map<int, int> per_plane_histogram;

  bool operator==(const SparsityCertificate&) const = default;
};

SparsityCertificate verify(const LatticeMap& map);

/// Recomputes the certificate by enumerating every m-plane meeting the box and
/// intersecting it with every unit cell; cones are rasterized at resolution 1/4.
SparsityCertificate brute_force_census(const LatticeMap& map, int max_side = 16);

/// Largest number of simplices whose image meets an open unit ball centred at a
/// lattice point of the box (cones count on their whole bounding box).
int unit_ball_census(const LatticeMap& map);

}  // namespace sparsemap
