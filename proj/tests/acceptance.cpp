// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sparsemap/bench.hpp"
#include "sparsemap/embedder.hpp"
#include "sparsemap/extension.hpp"
#include "sparsemap/generators.hpp"
#include "sparsemap/io.hpp"
#include "sparsemap/placement.hpp"
#include "sparsemap/verifier.hpp"
#include "sparsemap/width.hpp"

using namespace sparsemap;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string sides(const BenchReport& r) {
  std::string s;
  for (const auto& rec : r.records) s += (s.empty() ? "" : ",") + std::to_string(rec.box_side);
  return s;
}

LatticePoint random_point(std::mt19937_64& rng, int n, int hi) {
  std::uniform_int_distribution<int> u(0, hi);
  LatticePoint p(n);
  for (int a = 0; a < n; ++a) p[a] = u(rng);
  return p;
}

std::vector<GeomPiece> boundary_image(const SimplicialComplex& Y, const std::vector<std::vector<GeomPiece>>& images,
                                      std::size_t idx) {
  std::vector<GeomPiece> out;
  for (const auto& face : boundary(Y.simplex(idx))) {
    const auto& img = images[Y.index_of(face)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool all_exact(const LatticeMap& map) {
  for (const auto& img : map.images)
    for (const auto& p : img)
      if (!p.exact()) return false;
  return true;
}

// ---- 1 ----
Outcome placement_box() {
  int cases = 0, worst = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m)
      for (int V : {10, 50, 200}) {
        auto cfg = make_placement_config(n, m, V);
        const int side = static_cast<int>(std::ceil(oracle::min_constant(n, m) * std::pow(V, 1.0 / (n - m)) - 1e-9));
        if (cfg.box_side() != side) return {false, fmt("box side %d != %d at n=%d m=%d V=%d", cfg.box_side(), side, n, m, V)};
        auto p = greedy_place(V, cfg, TieBreak::lexicographic());
        if (static_cast<int>(p.coords.size()) != V || !check_placement(p, cfg))
          return {false, fmt("check_placement rejects n=%d m=%d V=%d", n, m, V)};
        for (const auto& c : p.coords)
          if ((c.array() < 0).any() || (c.array() > side).any()) return {false, "point outside the box"};
        const int per = oracle::max_points_per_plane(p.coords, n, m);
        worst = std::max(worst, per);
        if (per > 1) return {false, fmt("%d vertices on one %d-plane at n=%d V=%d", per, m, n, V)};
        ++cases;
      }
  return {true, fmt("%d (n,m,V) cases, max vertices per m-plane %d", cases, worst)};
}

// ---- 2 ----
Outcome diagonal() {
  for (int V = 1; V <= 100; ++V) {
    auto p = greedy_place(V, make_placement_config(2, 1, V), TieBreak::lexicographic());
    for (int i = 0; i < V; ++i)
      if (p.coords[i][0] != i || p.coords[i][1] != i) return {false, fmt("V=%d vertex %d off the diagonal", V, i)};
  }
  return {true, "V = 1..100 all on the diagonal"};
}

// ---- 3 ----
Outcome graph_exponent() {
  BenchConfig cfg;
  cfg.family = "random-regular";
  cfg.degree = 4;
  cfg.sizes = {64, 128, 256, 512};
  cfg.m = 1;
  cfg.n = 3;
  cfg.seed = 1;
  auto r = run_bench(cfg);
  int spp = 0;
  bool certified = true;
  for (const auto& rec : r.records) {
    spp = std::max(spp, rec.max_simplices_per_plane);
    certified = certified && rec.certificate.skeletal_ok;
  }
  const int first = r.records.front().max_simplices_per_plane;
  const bool ok = certified && std::abs(r.fit.slope - 0.5) <= 0.15 && spp <= 2 * first;
  return {ok, fmt("sides %s slope %.3f (0.5 +- 0.15) spp max %d vs %d at V=64", sides(r).c_str(), r.fit.slope, spp, first)};
}

// ---- 4 ----
Outcome complex_exponent() {
  BenchConfig cfg;
  cfg.family = "random-2complex";
  cfg.degree = 8;
  cfg.sizes = {32, 64, 128};
  cfg.m = 2;
  cfg.n = 5;
  cfg.seed = 1;
  auto r = run_bench(cfg);
  bool certified = true;
  for (const auto& rec : r.records) certified = certified && rec.certificate.skeletal_ok;
  const bool slope_ok = std::abs(r.fit.slope - 1.0 / 3) <= 0.2;
  std::string d = fmt("sides %s slope %.3f (1/3 +- 0.2) certified %s", sides(r).c_str(), r.fit.slope,
                      certified ? "yes" : "no");
  if (!slope_ok) d += "; slope outside tolerance at these sizes, criteria 6-8 stand in for the d=2 fit";
  return {certified && slope_ok, d};
}

// ---- 5 and 9 ----
BenchReport& path_sweep() {
  static BenchReport r = [] {
    BenchConfig cfg;
    cfg.family = "path";
    cfg.sizes = {64, 128, 256, 512, 1024};
    cfg.n = 3;
    cfg.pipeline = Pipeline::width;
    cfg.heights = "natural";
    return run_bench(cfg);
  }();
  return r;
}

Outcome width_exponents() {
  const auto& p = path_sweep();
  BenchConfig cfg;
  cfg.family = "random-regular";
  cfg.degree = 4;
  cfg.sizes = {64, 128, 256, 512, 1024};
  cfg.n = 3;
  cfg.seed = 7;
  cfg.pipeline = Pipeline::width;
  cfg.heights = "bfs";
  auto q = run_bench(cfg);
  const bool ok = std::abs(p.fit.slope - 1.0 / 3) <= 0.15 && std::abs(q.fit.slope - 0.5) <= 0.15;
  return {ok, fmt("path sides %s slope %.3f (1/3 +- 0.15); regular/bfs W %d..%d sides %s slope %.3f (1/2 +- 0.15)",
                  sides(p).c_str(), p.fit.slope, q.records.front().width->width, q.records.back().width->width,
                  sides(q).c_str(), q.fit.slope)};
}

Outcome census() {
  const auto& p = path_sweep();
  int worst = 0;
  for (const auto& rec : p.records) worst = std::max(worst, rec.census);
  const int first = p.records.front().census;
  return {worst <= 2 * first, fmt("max unit-ball census %d vs %d at V=64", worst, first)};
}

// ---- 6 ----
LatticeMap random_path_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_n(2, 3);
  const int n = pick_n(rng);
  const int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
  const int V = std::uniform_int_distribution<int>(2, 7)(rng);
  std::vector<Simplex> raw;
  for (int v = 0; v < V; ++v) raw.push_back({v});
  for (int a = 0; a < V; ++a)
    for (int b = a + 1; b < V; ++b)
      if (rng() % 3 == 0) raw.push_back({a, b});
  LatticeMap map;
  map.complex = build_complex(raw, V);
  map.n = n;
  map.m = m;
  map.images.assign(map.complex.size(), {});
  std::vector<LatticePoint> at;
  for (int v = 0; v < V; ++v) at.push_back(random_point(rng, n, 8));
  for (std::size_t i = 0; i < map.complex.size(); ++i) {
    const auto& s = map.complex.simplex(i);
    if (s.size() == 1) {
      map.images[i].push_back(make_point(at[s[0]]));
    } else {
      std::vector<LatticePoint> corners{at[s[0]], random_point(rng, n, 8), at[s[1]]};
      map.images[i].push_back(make_path(corners));
    }
  }
  map.recompute_box();
  return map;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2024);
  int embedded = 0, random = 0;
  std::uint64_t seed = 1;
  while (embedded + random < 200) {
    LatticeMap map;
    if ((embedded + random) % 2 == 0) {
      const int V = 4 + 2 * static_cast<int>(seed % 3);
      const int n = 2 + static_cast<int>(seed % 2);
      auto Y = random_regular_graph(V, 2 + static_cast<int>(seed % 2), seed);
      ++seed;
      map = embed(Y, 1, n);
      if (map.achieved_box.side() > 12 || !all_exact(map)) continue;
      ++embedded;
    } else {
      map = random_path_map(rng);
      if (map.achieved_box.side() > 12) continue;
      ++random;
    }
    if (!(verify(map) == brute_force_census(map, 12)))
      return {false, fmt("certificates differ on case %d", embedded + random)};
  }
  return {true, fmt("200 maps (%d embedded graphs, %d random lattice paths) identical", embedded, random)};
}

// ---- 7 ----
Outcome conservativeness() {
  std::mt19937_64 rng(77);
  const auto frame = ExtensionFrame::standard(4, 3);
  int trials = 0;
  for (int trial = 0; trial < 50; ++trials) {
    const int V = std::uniform_int_distribution<int>(3, 5)(rng);
    std::vector<Simplex> raw{{0, 1, 2}};
    for (int t = 0; t < 2; ++t) {
      Simplex s{static_cast<int>(rng() % V), static_cast<int>(rng() % V), static_cast<int>(rng() % V)};
      if (s[0] != s[1] && s[1] != s[2] && s[0] != s[2]) raw.push_back(s);
    }
    LatticeMap map;
    map.complex = build_complex(raw, V);
    map.n = 4;
    map.m = 3;
    map.images.assign(map.complex.size(), {});
    std::vector<LatticePoint> at;
    for (int v = 0; v < V; ++v) {
      LatticePoint p = random_point(rng, 4, 4);
      p[3] = 0;
      at.push_back(p);
    }
    for (std::size_t i = 0; i < map.complex.size(); ++i) {
      const auto& s = map.complex.simplex(i);
      if (s.size() == 1) map.images[i].push_back(make_point(at[s[0]]));
      if (s.size() == 2) {
        std::vector<LatticePoint> c{at[s[0]], at[s[1]]};
        map.images[i].push_back(make_path(c));
      }
    }
    for (std::size_t i : map.complex.of_dim(2)) map.images[i] = base_case_filling(boundary_image(map.complex, map.images, i), 2, frame);
    map.recompute_box();
    if (all_exact(map)) continue;  // every cone collapsed
    ++trial;
    const auto v = verify(map);
    const auto b = brute_force_census(map);
    if (!v.skeletal_ok || b.max_planes_per_simplex > v.max_planes_per_simplex ||
        b.max_simplices_per_plane > v.max_simplices_per_plane)
      return {false, fmt("trial %d: ground truth (%d,%d) exceeds certificate (%d,%d)", trial, b.max_planes_per_simplex,
                         b.max_simplices_per_plane, v.max_planes_per_simplex, v.max_simplices_per_plane)};
  }
  return {true, fmt("50 fillings with cones (%d drawn), ground truth <= certificate throughout", trials)};
}

// ---- 8 ----
int label_checks[2] = {0, 0};

// triangles over random lattice-path edges in {x_3 = 0}, as a 1-sparse skeleton map in R^4
SkeletonMap random_triangle_skeleton(std::mt19937_64& rng) {
  const int V = 9;
  std::vector<Simplex> raw;
  for (int t = 0; t < 8; ++t) {
    Simplex s{static_cast<int>(rng() % V), static_cast<int>(rng() % V), static_cast<int>(rng() % V)};
    if (s[0] != s[1] && s[1] != s[2] && s[0] != s[2]) raw.push_back(s);
  }
  SkeletonMap f{build_complex(raw, V), 1, 4, 1, {}};
  f.images.assign(f.complex.size(), {});
  std::vector<LatticePoint> at;
  for (int v = 0; v < V; ++v) {
    LatticePoint p = random_point(rng, 4, 6);
    p[3] = 0;
    at.push_back(p);
  }
  for (std::size_t i = 0; i < f.complex.size(); ++i) {
    const auto& s = f.complex.simplex(i);
    if (s.size() == 1) f.images[i].push_back(make_point(at[s[0]]));
    if (s.size() == 2) {
      std::vector<LatticePoint> c{at[s[0]], at[s[1]]};
      f.images[i].push_back(make_path(c));
    }
  }
  return f;
}

std::string restriction_and_labels() {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    // d = 1: vertices to edges in n = 3
    {
      auto Y = random_regular_graph(10, 3, seed);
      auto f = restrict_to(embed(Y, 1, 3), 0);
      f.m = 0;
      ExtensionOptions o;
      o.label_range = 16;
      o.active_axes = 3;
      auto F = extend(f, o);
      for (std::size_t i : Y.of_dim(0))
        if (piece_to_json(F.images[i][0]) != piece_to_json(f.images[i][0])) return "vertex moved by extension";
      auto L = label_simplices(f, 16, o);
      for (std::size_t a = 0; a < L.simplices.size(); ++a)
        for (std::size_t b = a + 1; b < L.simplices.size(); ++b) {
          if (L.labels[a] != L.labels[b]) continue;
          auto ca = oracle::cells_of_dim(boundary_image(Y, f.images, L.simplices[a]), 0);
          auto cb = oracle::cells_of_dim(boundary_image(Y, f.images, L.simplices[b]), 0);
          if (oracle::share_plane(ca, cb, 3, 1, 0b111u)) return "same-label edges share a line";
          ++label_checks[0];
        }
    }
    // d = 2: edges to triangles in n = 4
    {
      auto Y = random_2_complex(8, 6, seed);
      auto full = embed(Y, 2, 4);
      auto f = restrict_to(full, 1);
      f.m = 1;
      ExtensionOptions o;
      o.label_range = 32;
      o.active_axes = 4;
      auto F = extend(f, o);
      for (std::size_t i = 0; i < Y.size(); ++i) {
        if (Y.simplex(i).size() > 2) continue;
        if (F.images[i].size() != f.images[i].size()) return "skeleton image changed size";
        for (std::size_t q = 0; q < f.images[i].size(); ++q)
          if (piece_to_json(F.images[i][q]) != piece_to_json(f.images[i][q])) return "skeleton image changed";
      }
      // embedder skeletons funnel through the frame origin, so every pair usually conflicts;
      // random path skeletons give real label classes
      for (const auto& g : {f, random_triangle_skeleton(rng)}) {
        BoundingBox box;
        for (const auto& img : g.images) box.extend(bbox(img));
        if (box.side() > 10) continue;
        auto L = label_simplices(g, 32, o);
        for (std::size_t a = 0; a < L.simplices.size(); ++a)
          for (std::size_t b = a + 1; b < L.simplices.size(); ++b) {
            if (L.labels[a] != L.labels[b]) continue;
            auto ca = oracle::cells_of_dim(boundary_image(g.complex, g.images, L.simplices[a]), 1);
            auto cb = oracle::cells_of_dim(boundary_image(g.complex, g.images, L.simplices[b]), 1);
            if (oracle::share_plane(ca, cb, 4, 2, 0b1111u)) return "same-label triangles share a 2-plane in dimension 1";
            ++label_checks[1];
          }
      }
    }
  }
  ExtensionOptions o;
  o.active_axes = 4;
  for (int t = 0; t < 60; ++t) {
    auto g = random_triangle_skeleton(rng);
    auto L = label_simplices(g, 32, o);
    for (std::size_t a = 0; a < L.simplices.size(); ++a)
      for (std::size_t b = a + 1; b < L.simplices.size(); ++b) {
        if (L.labels[a] != L.labels[b]) continue;
        auto ca = oracle::cells_of_dim(boundary_image(g.complex, g.images, L.simplices[a]), 1);
        auto cb = oracle::cells_of_dim(boundary_image(g.complex, g.images, L.simplices[b]), 1);
        if (oracle::share_plane(ca, cb, 4, 2, 0b1111u)) return "same-label triangles share a 2-plane in dimension 1";
        ++label_checks[1];
      }
  }
  return {};
}

std::string prism_identity() {
  // every cell in a 3^3 box, swept along each axis it lacks, over every range
  const int n = 3;
  BoundingBox box;
  box.extend(lattice_zero(n));
  box.extend(LatticePoint(LatticePoint::Constant(n, 2)));
  std::string err;
  for (unsigned axes = 0; axes < 8u && err.empty(); ++axes) {
    for_each_lattice_point(box, [&](const LatticePoint& a) {
      if (!err.empty()) return;
      for (int ax = 0; ax < n; ++ax) {
        if (has_axis(axes, ax)) continue;
        for (int to = a[ax] + 1; to <= a[ax] + 2; ++to) {
          GeomPiece base(CubicalChain{n, {CubicalCell{a, axes}}});
          auto pr = prism_between(base, ax, a[ax], to);
          std::set<oracle::CellKey> prism_cells, rhs;
          for (const auto& c : lattice_cells(pr))
            if (c.dim() == popcount(axes) + 1) prism_cells.insert(oracle::key(c));
          rhs.insert(oracle::key(CubicalCell{a, axes}));
          LatticePoint top = a;
          top[ax] = to;
          rhs.insert(oracle::key(CubicalCell{top, axes}));
          for (const auto& k : oracle::boundary_mod2({oracle::key(CubicalCell{a, axes})})) {
            LatticePoint p(n);
            for (int i = 0; i < n; ++i) p[i] = k.first[i];
            for (const auto& c : lattice_cells(prism_between(GeomPiece(CubicalChain{n, {CubicalCell{p, k.second}}}), ax, a[ax], to)))
              if (c.dim() == popcount(k.second) + 1) {
                auto key = oracle::key(c);
                if (!rhs.erase(key)) rhs.insert(key);
              }
          }
          if (oracle::boundary_mod2(prism_cells) != rhs) {
            err = "prism boundary identity fails";
            return;
          }
        }
      }
    });
  }
  return err;
}

std::string snake_bijective() {
  for (int n = 2; n <= 3; ++n)
    for (int side = 1; side <= 3; ++side)
      for (int N = 1; N <= 12; ++N) {
        SnakeMap S(N, side, n);
        BoundingBox dom;
        dom.extend(lattice_zero(n));
        LatticePoint hi = LatticePoint::Constant(n, side - 1);
        hi[0] = N * side - 1;
        dom.extend(hi);
        for (unsigned axes = 0; axes < (1u << n); ++axes) {
          std::set<std::vector<int>> seen;
          long count = 0;
          bool inside = true;
          for_each_lattice_point(dom, [&](const LatticePoint& a) {
            auto c = S.relocate(CubicalCell{a, axes});
            seen.insert(oracle::pt(c.anchor));
            ++count;
            for (int i = 0; i < n; ++i) inside = inside && c.anchor[i] >= 0 && c.anchor[i] <= S.target_side();
          });
          if (static_cast<long>(seen.size()) != count || !inside) return fmt("snake N=%d s=%d n=%d not bijective", N, side, n);
        }
      }
  return {};
}

Outcome structural() {
  for (auto* part : {&restriction_and_labels, &prism_identity, &snake_bijective}) {
    const auto err = (*part)();
    if (!err.empty()) return {false, err};
  }
  if (label_checks[0] == 0 || label_checks[1] == 0) return {false, fmt("same-label pairs checked: %d, %d", label_checks[0], label_checks[1])};
  return {true, fmt("restriction bit-exact, %d + %d same-label pairs (d=1, d=2) share no plane, prism boundary identity, "
                    "snake bijective",
                    label_checks[0], label_checks[1])};
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Item items[] = {
      {1, "sparse placement box", &placement_box},
      {2, "diagonal example", &diagonal},
      {3, "graph exponent d=1", &graph_exponent},
      {4, "complex exponent d=2", &complex_exponent},
      {5, "width exponents", &width_exponents},
      {6, "verifier vs brute force", &oracle_equivalence},
      {7, "cone conservativeness", &conservativeness},
      {8, "structural invariants", &structural},
      {9, "unit-ball census", &census},
  };
  int failed = 0;
  for (const auto& it : items) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (it.id == 1 && secs >= 10) {
      o.pass = false;
      o.detail += fmt("; took %.1f s (limit 10 s)", secs);
    }
    std::printf("criterion %d %s  %-26s %s  [%.1f s]\n", it.id, o.pass ? "PASS" : "FAIL", it.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of 9 criteria pass\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
