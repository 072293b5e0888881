#pragma once

// Finite simplicial complexes with bounded vertex degree.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sparsemap/error.hpp"

namespace sparsemap {

/// Sorted tuple of distinct vertex indices.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Downward-closed set of simplices on vertices [0, V).
///
/// Simplices are stored ordered by dimension, then lexicographically, so the
/// index of a simplex is stable and iteration follows skeleta.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int dim() const { return dim_; }
  int vertex_count() const { return vertex_count_; }
  bool empty() const { return simplices_.empty(); }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }

  /// Index of `s` or -1 when absent.
  long index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  /// Indices of all simplices of dimension exactly k, in storage order.
  std::vector<std::size_t> of_dim(int k) const;
  std::size_t count_of_dim(int k) const;

  /// Largest vertex degree (the smallest valid DegreeBound).
  int max_degree() const;

  std::vector<int> degrees() const;

 private:
  friend SimplicialComplex build_complex(std::span<const Simplex> raw, int vertex_count);
  friend SimplicialComplex make_complex_from_closed(std::vector<Simplex> closed, int vertex_count);

  int dim_ = -1;
  int vertex_count_ = 0;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::size_t> dim_begin_;  // dim_begin_[k] .. dim_begin_[k+1]
};

/// Downward closure of `raw`. Vertex count defaults to 1 + the largest index.
/// Isolated vertices beyond the largest index can be requested with `vertex_count`.
SimplicialComplex build_complex(std::span<const Simplex> raw, int vertex_count = -1);
SimplicialComplex build_complex(const std::vector<Simplex>& raw, int vertex_count = -1);

/// Number of simplices of all dimensions containing v, the vertex itself included.
int degree(const SimplicialComplex& Y, int v);

/// Codimension-one faces, dropping vertex 0, 1, ... in turn.
std::vector<Simplex> boundary(const Simplex& s);

/// Graph subdivision result.  Vertices [0, V) keep their identity; new vertex
/// V + k sits on edge `provenance[k]` at fraction `fraction[k]` from its lower endpoint.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<Simplex> provenance;
  std::vector<double> fraction;
  /// For every edge of the subdivided complex, the original edge it lies on.
  std::map<Simplex, Simplex> parent_edge;
};

/// Replaces each cut edge by a chain through new vertices at the given fractions.
Subdivision subdivide_edges(const SimplicialComplex& Y,
                            const std::map<Simplex, std::vector<double>>& cut_points);

/// Connected components of the 1-skeleton (union-find).
int component_count(const SimplicialComplex& Y);

}  // namespace sparsemap
