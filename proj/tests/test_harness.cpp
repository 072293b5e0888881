#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "sparsemap/bench.hpp"
#include "sparsemap/embedder.hpp"
#include "sparsemap/export.hpp"
#include "sparsemap/generators.hpp"
#include "sparsemap/io.hpp"
#include "sparsemap/verifier.hpp"

using namespace sparsemap;

namespace {

LatticePoint P(std::initializer_list<int> xs) {
  LatticePoint p(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) p[i++] = x;
  return p;
}

int count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int k = 0;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++k;
  return k;
}

int occurrences(const std::string& text, const std::string& what) {
  int k = 0;
  for (auto at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++k;
  return k;
}

void same_cells(const GeomPiece& a, const GeomPiece& b) {
  auto ca = lattice_cells(a), cb = lattice_cells(b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  CHECK(ca == cb);
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("complex json") {
  auto Y = random_2_complex(12, 10, 4);
  auto j = complex_to_json(Y);
  CHECK(j["d"] == 2);
  CHECK(j["V"] == Y.vertex_count());
  auto back = complex_from_json(parse_json(j.dump()));
  CHECK(back.simplices() == Y.simplices());
  // faces are implied
  auto tri = complex_from_json(parse_json(R"({"d": 2, "V": 3, "simplices": [[0, 1, 2]]})"));
  CHECK(tri.size() == 7);
}

TEST_CASE("pieces and planes round trip") {
  auto seg = share(make_segment(P({0, 0, 0}), P({3, 0, 0})));
  std::vector<GeomPiece> pieces{make_point(P({1, 2, 3})), make_segment(P({0, 0, 0}), P({0, 2, 0})),
                                GeomPiece(Prism{seg, 1, 0, 2}),
                                GeomPiece(CubicalChain{3, {CubicalCell{P({1, 1, 1}), axis_bit(0) | axis_bit(2)}}})};
  for (const auto& p : pieces) same_cells(piece_from_json(parse_json(piece_to_json(p).dump())), p);
  GeomPiece cone(Cone{share(make_segment(P({0, 0, 0}), P({2, 0, 0}))), RealPoint(P({0, 0, 0}).cast<double>())});
  auto back = piece_from_json(piece_to_json(cone));
  REQUIRE(back.is<Cone>());
  CHECK(back.dim() == 2);

  MPlane h(axis_bit(0) | axis_bit(2), P({0, 5, 0}));
  auto hj = plane_to_json(h);
  CHECK(hj["fixed"]["1"] == 5);
  CHECK(plane_from_json(hj, 3) == h);
}

TEST_CASE("map and certificate round trip") {
  auto Y = random_regular_graph(20, 3, 2);
  auto map = embed(Y, 1, 3);
  auto cert = verify(map);
  auto j = map_to_json(map, &cert);
  auto back = map_from_json(parse_json(j.dump()));
  CHECK(back.n == 3);
  CHECK(back.m == 1);
  CHECK(back.complex.simplices() == Y.simplices());
  CHECK(verify(back) == cert);
  CHECK(certificate_from_json(j["certificate"]) == cert);
  CHECK(back.constants_log.size() == map.constants_log.size());
  CHECK(simplex_from_key(simplex_key({2, 7})) == Simplex{2, 7});
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{\"d\": 1,"), Error);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code([] { parse_json("[1, 2"); }) == Errc::ParseError);
  CHECK(code([] { complex_from_json(parse_json(R"({"d": 1})")); }) == Errc::ParseError);
  CHECK(code([] { complex_from_json(parse_json(R"({"d": 1, "V": 2, "simplices": [[0, 5]]})")); }) ==
        Errc::VertexOutOfRange);
  CHECK(code([] { complex_from_json(parse_json(R"({"d": 1, "V": 3, "simplices": [[0, "x"]]})")); }) ==
        Errc::ParseError);
  CHECK(code([] { piece_from_json(parse_json(R"({"type": "blob"})")); }) == Errc::ParseError);
  CHECK(code([] { piece_from_json(parse_json(R"({"type": "prism", "base": {"type": "point", "at": [0, 0]}, "axis": 0, "from": 3, "to": 1})")); }) == Errc::ParseError);
  CHECK(code([] { map_from_json(parse_json(R"({"n": 3})")); }) == Errc::ParseError);
}

TEST_CASE("exponent fit") {
  std::vector<double> V{10, 100, 1000, 10000}, s;
  for (double v : V) s.push_back(3 * std::pow(v, 0.25));
  auto fit = fit_exponent(V, s);
  CHECK(fit.slope == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3).epsilon(1e-9));
  CHECK(fit.standard_error < 1e-9);
  CHECK_THROWS_AS(fit_exponent({1, 2}, {1, 2}), Error);

  // noisy points: residuals sum to zero, standard error from the textbook formula
  std::vector<double> noisy{2.0, 2.9, 4.4, 5.7};
  auto f2 = fit_exponent(V, noisy);
  double sum = 0, ss = 0, mx = 0, sxx = 0;
  for (double r : f2.residuals) sum += r, ss += r * r;
  for (double v : V) mx += std::log(v) / 4;
  for (double v : V) sxx += (std::log(v) - mx) * (std::log(v) - mx);
  CHECK(std::abs(sum) < 1e-9);
  CHECK(f2.standard_error == doctest::Approx(std::sqrt(ss / 2 / sxx)).epsilon(1e-9));
}

TEST_CASE("bench sweeps") {
  BenchConfig cfg;
  cfg.family = "random-regular";
  cfg.sizes = {64, 128, 256, 512};
  cfg.seed = 3;
  auto rep = run_bench(cfg);
  REQUIRE(rep.records.size() == 4);
  CHECK(rep.fit.slope == doctest::Approx(0.5).epsilon(0.3));
  CHECK(rep.predicted_low == doctest::Approx(0.5));
  for (const auto& r : rep.records) CHECK(r.certificate.skeletal_ok);
  CHECK_FALSE(rep.records[0].runtime_seconds);
  CHECK(bench_report_to_json(run_bench(cfg)).dump() == bench_report_to_json(rep).dump());

  BenchConfig w;
  w.family = "path";
  w.sizes = {64, 256, 1024};
  w.pipeline = Pipeline::width;
  auto wr = run_bench(w);
  CHECK(std::abs(wr.fit.slope - 1.0 / 3) <= 0.15);
  CHECK(wr.predicted_low == doctest::Approx(1.0 / 3));
  CHECK(wr.predicted_high == doctest::Approx(1.0 / 3 + 1.0 / 6));
  for (const auto& r : wr.records) CHECK(r.width.has_value());
  auto j = bench_report_to_json(wr);
  CHECK(j.dump().find("runtime") == std::string::npos);

  BenchConfig two = cfg;
  two.sizes = {64, 128};
  CHECK_THROWS_AS(run_bench(two), Error);
}

TEST_CASE("export") {
  auto G = cycle_graph(6);
  auto plane = embed(G, 1, 2);
  auto svg = export_map(plane, ExportFormat::svg);
  CHECK(occurrences(svg, "<circle") == 6);
  CHECK(occurrences(svg, "<path") == 6);
  CHECK(svg.rfind("<svg", 0) == 0);

  auto T = random_2_complex(10, 6, 1);
  auto space = embed(T, 2, 3);
  auto obj = export_map(space, ExportFormat::obj);
  CHECK(count_lines(obj, "v ") > 0);
  CHECK(count_lines(obj, "g ") == static_cast<int>(T.size()));
  int quads = 0;
  std::istringstream in(obj);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("f ", 0) != 0) continue;
    if (occurrences(line, " ") == 4) ++quads;
  }
  CHECK(quads > 0);

  CHECK(export_map(space, ExportFormat::json).find("\"images\"") != std::string::npos);
  CHECK_THROWS_AS(export_map(embed(G, 1, 5), ExportFormat::obj), Error);
  CHECK_THROWS_AS(export_map(space, ExportFormat::svg), Error);
  CHECK_THROWS_AS(parse_export_format("png"), Error);
}

}  // TEST_SUITE
