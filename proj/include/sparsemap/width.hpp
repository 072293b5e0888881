#pragma once

// Width-improved embedding of graphs: chunk by a height function, embed each
// chunk into its own cube of a long prism, then fold the prism into a cube.

#include <optional>
#include <vector>

#include "sparsemap/lattice_map.hpp"
#include "sparsemap/placement.hpp"
#include "sparsemap/verifier.hpp"

namespace sparsemap {

/// Vertex heights in [0, 1], extended linearly over simplices.
struct HeightFunction {
  std::vector<double> values;

  double operator[](int v) const { return values[static_cast<std::size_t>(v)]; }
  bool injective() const;
};

/// Heights v / (V-1), the natural sweep of a path.
HeightFunction natural_heights(int V);
/// BFS rank / (V-1), restarting at the least unvisited vertex of each component.
HeightFunction bfs_heights(const SimplicialComplex& Y);

/// Spreads tied heights over the lower half of the gap to the next distinct
/// height.  `factor` receives width after / width before.
HeightFunction perturb_ties(const SimplicialComplex& Y, const HeightFunction& h, double* factor = nullptr);

/// Max number of simplices whose height interval contains a sample point; the
/// samples are all midpoints between consecutive distinct vertex heights plus
/// `extra_samples` uniform points.
int measure_width(const SimplicialComplex& Y, const HeightFunction& h, int extra_samples = 0);

struct ChunkDecomposition {
  /// p_0 = 0 < p_1 < ... < p_N = 1
  std::vector<double> breakpoints;
  /// original vertices of each chunk, in height order
  std::vector<std::vector<int>> chunks;
  /// simplices meeting each interior fiber p_1 .. p_{N-1}
  std::vector<int> fiber_sizes;

  int size() const { return static_cast<int>(chunks.size()); }
  /// chunk index of a height: number of interior breakpoints below it
  int chunk_of(double height) const;
};

ChunkDecomposition choose_breakpoints(const SimplicialComplex& Y, const HeightFunction& h, int W);

struct ChunkOptions {
  /// c in s = ceil(c * (largest chunk)^{1/(n-d)})
  double cube_constant = 1.0;
  int retry_budget = 8;
  int base_case_cap = 64;
};

/// Pre-snake map of a complex whose vertices carry chunk indices; every simplex
/// must span at most two consecutive chunks.
struct ChunkEmbedding {
  LatticeMap map;
  int cube_side = 0;
  int chunks = 0;
  /// every piece of a chunk-i simplex lies in cubes i-1 and i
  bool chunk_local = true;
  double cube_constant = 0;
  int retries = 0;
  int max_chunk = 0;
};

ChunkEmbedding embed_chunks(const SimplicialComplex& Y, const std::vector<int>& vertex_chunk, int n,
                            const ChunkOptions& options = {});

/// Boustrophedon fold of N cubes of side s (the prism [0, N s] x [0, s]^{n-1})
/// into a grid of k^n cubes, k = ceil(N^{1/n}).  Rows run along axis 0; a
/// reversed row also reflects the source axis 0 inside each cube.
class SnakeMap {
 public:
  SnakeMap(int cubes, int side, int n);

  int cubes() const { return cubes_; }
  int side() const { return side_; }
  int grid() const { return grid_; }
  int target_side() const { return grid_ * side_; }

  /// grid position of cube i and whether its row runs backwards
  LatticePoint cube_position(int i) const;
  bool reversed(int i) const;

  CubicalCell relocate(const CubicalCell& c) const;
  RealPoint map_point(const RealPoint& p) const;

  /// True when cubes i and i+1 sit in different rows.
  bool turns_after(int i) const;
  /// Unit cells of the U-shaped path outside the grid joining the two images
  /// of a point p on the face between cubes i and i+1 (p[0] == (i+1) s).
  /// Empty when the fold is continuous there.
  std::vector<CubicalCell> bridge(const LatticePoint& p) const;

  /// max |S(p) - S(q)| / |p - q| over grid points at resolution 1/2 with |p - q| <= 1
  double sampled_distortion() const;

 private:
  int cube_of(double x0) const;
  int cubes_, side_, n_, grid_;
};

struct WidthOptions {
  /// chunk size = max(1, round(chunk_factor * W))
  double chunk_factor = 1.0;
  int extra_samples = 0;
  ChunkOptions chunk;
  bool measure_distortion = true;
};

struct WidthReport {
  int width = 0;
  int chunk_target = 0;
  int chunks = 0;
  std::vector<int> chunk_sizes;
  int cube_side = 0;
  double cube_constant = 0;
  int retries = 0;
  int prism_length = 0;
  int final_side = 0;
  int census_max = 0;
  double distortion = 0;
  bool chunk_local = true;
  /// false when some crossing at a row turn could not be bridged (d >= 2)
  bool continuous = true;
  int bridges = 0;
  double perturbation_factor = 1;
  SparsityCertificate certificate;
};

struct WidthResult {
  LatticeMap map;
  WidthReport report;
};

/// Full pipeline for graphs (d = 1).
WidthResult width_embed(const SimplicialComplex& Y, const HeightFunction& h, int n,
                        const WidthOptions& options = {});

/// Pipeline for any d with a caller-supplied chunk index per vertex.
WidthResult width_embed_chunked(const SimplicialComplex& Y, const std::vector<int>& vertex_chunk, int n,
                                const WidthOptions& options = {});

}  // namespace sparsemap
