#include "sparsemap/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sparsemap {

SimplicialComplex random_regular_graph(int V, int k, std::uint64_t seed) {
  if (V < 1 || k < 0 || k >= V || (static_cast<long>(V) * k) % 2 != 0) {
    throw Error(Errc::InvalidArgument, "random regular graph needs 0 <= k < V and V*k even");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < V; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(k), v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Simplex> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) ok = false;
      if (a > b) std::swap(a, b);
      ok = ok && edges.insert({a, b}).second;
    }
    if (!ok) continue;
    std::vector<Simplex> raw(edges.begin(), edges.end());
    return build_complex(raw, V);
  }
  throw Error(Errc::InvalidArgument, "pairing model did not produce a simple graph");
}

SimplicialComplex path_graph(int V) {
  std::vector<Simplex> raw;
  for (int v = 0; v + 1 < V; ++v) raw.push_back({v, v + 1});
  return build_complex(raw, V);
}

SimplicialComplex cycle_graph(int V) {
  if (V < 3) throw Error(Errc::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Simplex> raw;
  for (int v = 0; v < V; ++v) raw.push_back({std::min(v, (v + 1) % V), std::max(v, (v + 1) % V)});
  return build_complex(raw, V);
}

SimplicialComplex random_2_complex(int V, int max_degree, std::uint64_t seed) {
  if (V < 3) throw Error(Errc::InvalidArgument, "2-complex needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, V - 1);
  std::vector<int> deg(static_cast<std::size_t>(V), 1);
  std::set<Simplex> tris, edges;
  const int target = V;
  for (int tries = 0; tries < 200 * V && static_cast<int>(tris.size()) < target; ++tries) {
    Simplex t{pick(rng), pick(rng), pick(rng)};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || tris.count(t)) continue;
    // degree increase per vertex: the triangle plus its new edges
    std::vector<int> add(3, 1);
    const Simplex es[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    for (const auto& e : es) {
      if (edges.count(e)) continue;
      for (int q = 0; q < 3; ++q) add[q] += (t[q] == e[0] || t[q] == e[1]) ? 1 : 0;
    }
    bool fits = true;
    for (int q = 0; q < 3; ++q) fits = fits && deg[t[q]] + add[q] <= max_degree;
    if (!fits) continue;
    for (int q = 0; q < 3; ++q) deg[t[q]] += add[q];
    for (const auto& e : es) edges.insert(e);
    tris.insert(t);
  }
  std::vector<Simplex> raw(tris.begin(), tris.end());
  return build_complex(raw, V);
}

SimplicialComplex make_family(const std::string& family, int V, int degree, std::uint64_t seed) {
  if (family == "random-regular") return random_regular_graph(V, degree, seed);
  if (family == "path") return path_graph(V);
  if (family == "cycle") return cycle_graph(V);
  if (family == "random-2complex") return random_2_complex(V, degree, seed);
  throw Error(Errc::InvalidArgument, "unknown family '" + family + "'");
}

}  // namespace sparsemap
