#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sparsemap/embedder.hpp"
#include "sparsemap/generators.hpp"
#include "sparsemap/io.hpp"
#include "sparsemap/width.hpp"

using namespace sparsemap;

namespace {

HeightFunction H(std::vector<double> v) { return HeightFunction{std::move(v)}; }

// max number of simplices over generic fibers, by direct enumeration
int width_oracle(const SimplicialComplex& Y, const HeightFunction& h) {
  std::vector<double> hs = h.values;
  std::sort(hs.begin(), hs.end());
  int best = 0;
  for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
    if (hs[i] == hs[i + 1]) continue;
    const double t = 0.5 * (hs[i] + hs[i + 1]);
    int count = 0;
    for (const auto& s : Y.simplices()) {
      double lo = 2, hi = -1;
      for (int v : s) {
        lo = std::min(lo, h[v]);
        hi = std::max(hi, h[v]);
      }
      if (lo <= t && t <= hi) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

std::set<std::pair<std::vector<int>, unsigned>> cells(const LatticeMap& map, std::size_t i) {
  std::set<std::pair<std::vector<int>, unsigned>> out;
  for (const auto& p : map.images[i])
    for (const auto& c : lattice_cells(p)) out.insert(oracle::key(c));
  return out;
}

}  // namespace

TEST_SUITE("width") {

TEST_CASE("measured width") {
  auto path = build_complex(std::vector<Simplex>{{0, 1}, {1, 2}});
  CHECK(measure_width(path, H({0, 0.5, 1})) == 1);
  auto star = build_complex(std::vector<Simplex>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(measure_width(star, H({0, 1, 1, 1})) == 3);
  auto dot = build_complex(std::vector<Simplex>{{0}});
  CHECK(measure_width(dot, H({0.3})) == 0);
  auto tri = build_complex(std::vector<Simplex>{{0, 1, 2}});
  try {
    measure_width(tri, H({0, 0.5, 1}));
    FAIL("2-complex accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAGraph);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto Y = random_regular_graph(30, 4, seed);
    for (const auto& h : {natural_heights(30), bfs_heights(Y)}) CHECK(measure_width(Y, h) == width_oracle(Y, h));
  }
}

TEST_CASE("tie perturbation") {
  auto star = build_complex(std::vector<Simplex>{{0, 1}, {0, 2}, {0, 3}});
  double factor = 0;
  auto h = perturb_ties(star, H({0, 1, 1, 1}), &factor);
  CHECK(h.injective());
  CHECK(factor >= 1.0);
  for (double x : h.values) {
    CHECK(x >= 0);
    CHECK(x <= 1);
  }
}

TEST_CASE("breakpoints") {
  auto p10 = path_graph(10);
  auto d1 = choose_breakpoints(p10, natural_heights(10), 5);
  CHECK(d1.size() == 2);
  CHECK(d1.chunks[0].size() == 5);
  CHECK(d1.chunks[1].size() == 5);
  CHECK(d1.breakpoints.size() == 3);
  CHECK(d1.fiber_sizes == std::vector<int>{1});
  auto d2 = choose_breakpoints(p10, natural_heights(10), 10);
  CHECK(d2.size() == 1);
  CHECK(d2.breakpoints == std::vector<double>{0.0, 1.0});
  auto d3 = choose_breakpoints(path_graph(11), natural_heights(11), 5);
  REQUIRE(d3.size() == 2);
  CHECK(d3.chunks[0].size() == 5);
  CHECK(d3.chunks[1].size() == 6);
  CHECK(d3.chunk_of(0.0) == 0);
  CHECK(d3.chunk_of(1.0) == 1);
  try {
    choose_breakpoints(p10, H({0, 0, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}), 5);
    FAIL("ties accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateHeights);
  }
}

TEST_CASE("snake") {
  SnakeMap id(1, 3, 3);
  CubicalCell c{lattice_zero(3), 0b011u};
  c.anchor[0] = 1;
  c.anchor[2] = 2;
  CHECK(id.relocate(c) == c);

  SnakeMap s(4, 1, 2);
  CHECK(s.grid() == 2);
  std::vector<std::vector<int>> pos;
  for (int i = 0; i < 4; ++i) pos.push_back(oracle::pt(s.cube_position(i)));
  CHECK(pos == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(s.sampled_distortion() <= 3.0);

  // bijectivity on the half-open prism cells
  for (auto [N, side, n] : {std::tuple{4, 1, 2}, std::tuple{5, 2, 2}, std::tuple{9, 2, 3}, std::tuple{7, 3, 2}}) {
    SnakeMap S(N, side, n);
    for (unsigned axes = 0; axes < (1u << n); ++axes) {
      std::set<std::vector<int>> seen;
      long count = 0;
      BoundingBox dom;
      LatticePoint lo = lattice_zero(n), hi = LatticePoint::Constant(n, side - 1);
      hi[0] = N * side - 1;
      dom.extend(lo);
      dom.extend(hi);
      for_each_lattice_point(dom, [&](const LatticePoint& a) {
        seen.insert(oracle::pt(S.relocate({a, axes}).anchor));
        ++count;
      });
      long expect = N;
      for (int i = 0; i < n; ++i) expect *= side;
      CHECK(count == expect);
      CHECK(static_cast<long>(seen.size()) == expect);
    }
  }
}

TEST_CASE("chunks stay local") {
  auto Y = path_graph(20);
  std::vector<int> chunk(20);
  for (int v = 0; v < 20; ++v) chunk[v] = v / 5;
  auto ce = embed_chunks(Y, chunk, 3);
  CHECK(ce.chunks == 4);
  CHECK(ce.chunk_local);
  const int s = ce.cube_side;
  for (std::size_t e : Y.of_dim(1)) {
    const int i = std::max(chunk[Y.simplex(e)[0]], chunk[Y.simplex(e)[1]]);
    auto b = bbox(ce.map.images[e]);
    CHECK(b.lo[0] >= std::max(0, (i - 1) * s));
    CHECK(b.hi[0] <= (i + 1) * s);
  }
  CHECK(verify(ce.map).skeletal_ok);

  WidthOptions opts;
  opts.chunk_factor = 5;
  auto r = width_embed(Y, natural_heights(20), 3, opts);
  CHECK(r.report.chunks == 4);
  CHECK(r.report.chunk_local);
  CHECK(r.report.certificate.skeletal_ok);

  std::vector<int> far{0, 2};
  auto e = build_complex(std::vector<Simplex>{{0, 1}});
  CHECK_THROWS_AS(embed_chunks(e, far, 3), Error);
}

TEST_CASE("edge images stay connected across the fold") {
  auto check = [](const SimplicialComplex& G, const WidthResult& r) {
    CHECK(r.report.chunk_local);
    CHECK(r.report.continuous);
    CHECK(r.report.certificate.skeletal_ok);
    int broken = 0;
    for (std::size_t e : G.of_dim(1)) {
      const auto& s = G.simplex(e);
      auto a = oracle::pt(to_lattice(r.map.images[G.index_of({s[0]})][0].as<Point>().at).value());
      auto b = oracle::pt(to_lattice(r.map.images[G.index_of({s[1]})][0].as<Point>().at).value());
      if (!oracle::reachable(oracle::cells_of_dim(r.map.images[e], 1), a).count(b)) ++broken;
    }
    CHECK(broken == 0);
  };
  auto C = cycle_graph(40);
  auto rc = width_embed(C, bfs_heights(C), 3);
  CHECK(rc.report.chunks >= 9);  // enough cubes for the fold to turn
  CHECK(rc.report.bridges > 0);
  check(C, rc);
  auto Y = random_regular_graph(96, 4, 3);
  check(Y, width_embed(Y, bfs_heights(Y), 3));
  check(path_graph(200), width_embed(path_graph(200), natural_heights(200), 3));
}

TEST_CASE("one chunk is an identity snake") {
  auto Y = random_regular_graph(24, 4, 5);
  std::vector<int> zero(24, 0);
  auto ce = embed_chunks(Y, zero, 3);
  auto r = width_embed_chunked(Y, zero, 3);
  for (std::size_t i = 0; i < Y.size(); ++i) CHECK(cells(r.map, i) == cells(ce.map, i));
  auto plain = embed(Y, 1, 3);
  CHECK(r.map.achieved_box.side() <= 2 * plain.achieved_box.side());
}

TEST_CASE("sweep heights on a regular graph stay near the plain embedding") {
  auto Y = random_regular_graph(128, 4, 1);
  auto r = width_embed(Y, bfs_heights(Y), 3);
  auto plain = embed(Y, 1, 3);
  CHECK(r.report.certificate.skeletal_ok);
  CHECK(r.map.achieved_box.side() <= 2 * plain.achieved_box.side());
  CHECK(plain.achieved_box.side() <= 2 * r.map.achieved_box.side());
}

TEST_CASE("path family") {
  for (int V : {32, 128}) {
    auto r = width_embed(path_graph(V), natural_heights(V), 3);
    CHECK(r.report.width == 1);
    CHECK(r.report.certificate.skeletal_ok);
    CHECK(r.report.census_max <= 3);
  }
}

TEST_CASE("height json") {
  auto h = natural_heights(7);
  auto back = heights_from_json(heights_to_json(h), 7);
  CHECK(back.values == h.values);
  CHECK_THROWS_AS(heights_from_json(parse_json("{\"heights\":{\"0\":[1,0]}}"), 1), Error);
  CHECK_THROWS_AS(heights_from_json(parse_json("{\"heights\":{}}"), 1), Error);
}

}
