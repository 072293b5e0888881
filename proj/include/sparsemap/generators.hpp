#pragma once

// Seeded random and structured complexes for tests and benchmarks.

#include <cstdint>
#include <string>

#include "sparsemap/complex.hpp"

namespace sparsemap {

/// Simple random k-regular graph by the pairing model with restarts (V*k even).
SimplicialComplex random_regular_graph(int V, int k, std::uint64_t seed);

SimplicialComplex path_graph(int V);
SimplicialComplex cycle_graph(int V);

/// Random pure-ish 2-complex: triangles drawn uniformly while every vertex
/// stays within `max_degree` (all simplices through it), about V triangles.
SimplicialComplex random_2_complex(int V, int max_degree, std::uint64_t seed);

/// Dispatch by family name: random-regular, path, cycle, random-2complex.
SimplicialComplex make_family(const std::string& family, int V, int degree, std::uint64_t seed);

}  // namespace sparsemap
