#include "sparsemap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <Eigen/Dense>

#include "sparsemap/generators.hpp"

namespace sparsemap {

ExponentFit fit_exponent(const std::vector<double>& V, const std::vector<double>& side) {
  if (V.size() != side.size()) throw Error(Errc::InvalidArgument, "fit needs paired samples");
  if (V.size() < 3) throw Error(Errc::InvalidArgument, "fit needs at least three sizes");
  const auto k = static_cast<Eigen::Index>(V.size());
  Eigen::MatrixXd A(k, 2);
  Eigen::VectorXd y(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (V[i] <= 0 || side[i] <= 0) throw Error(Errc::InvalidArgument, "fit needs positive values");
    A(i, 0) = std::log(V[i]);
    A(i, 1) = 1.0;
    y[i] = std::log(side[i]);
  }
  const Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd r = y - A * beta;
  const double sigma2 = r.squaredNorm() / static_cast<double>(k - 2);
  const Eigen::Matrix2d cov = sigma2 * (A.transpose() * A).inverse();
  ExponentFit fit;
  fit.slope = beta[0];
  fit.intercept = beta[1];
  fit.standard_error = std::sqrt(std::max(0.0, cov(0, 0)));
  fit.residuals.assign(r.data(), r.data() + k);
  return fit;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.sizes.size() < 3) throw Error(Errc::InvalidArgument, "bench needs at least three sizes");
  BenchReport report;
  report.config = config;
  std::sort(report.config.sizes.begin(), report.config.sizes.end());
  const int n = config.n;

  for (int V : report.config.sizes) {
    const auto Y = make_family(config.family, V, config.degree, config.seed);
    BenchRecord rec;
    rec.V = V;
    rec.simplices = static_cast<int>(Y.size());
    const auto start = std::chrono::steady_clock::now();
    LatticeMap map;
    if (config.pipeline == Pipeline::sparse) {
      map = embed(Y, config.m, n, config.embed);
      rec.certificate = verify(map);
    } else {
      std::string kind = config.heights;
      if (kind.empty()) kind = config.family == "path" || config.family == "cycle" ? "natural" : "bfs";
      if (kind != "natural" && kind != "bfs") throw Error(Errc::InvalidArgument, "unknown height kind " + kind);
      const HeightFunction h = kind == "natural" ? natural_heights(Y.vertex_count()) : bfs_heights(Y);
      auto result = width_embed(Y, h, n, config.width);
      map = std::move(result.map);
      rec.certificate = result.report.certificate;
      rec.width = std::move(result.report);
    }
    const auto stop = std::chrono::steady_clock::now();
    if (config.with_timing) rec.runtime_seconds = std::chrono::duration<double>(stop - start).count();
    rec.box_side = map.achieved_box.side();
    rec.max_planes_per_simplex = rec.certificate.max_planes_per_simplex;
    rec.max_simplices_per_plane = rec.certificate.max_simplices_per_plane;
    rec.census = rec.width ? rec.width->census_max : unit_ball_census(map);
    report.records.push_back(std::move(rec));
  }

  std::vector<double> xs, ys;
  for (const auto& r : report.records) {
    xs.push_back(r.V);
    ys.push_back(std::max(1, r.box_side));
  }
  report.fit = fit_exponent(xs, ys);
  if (config.pipeline == Pipeline::sparse) {
    report.predicted_low = report.predicted_high = config.m < n ? 1.0 / (n - config.m) : 0.0;
  } else {
    // V^{1/n} W^{d/(n(n-d))} with d = 1 at W = O(1) and W ~ V
    report.predicted_low = 1.0 / n;
    report.predicted_high = 1.0 / n + 1.0 / (n * (n - 1.0));
  }
  return report;
}

json bench_report_to_json(const BenchReport& r) {
  const auto& c = r.config;
  json records = json::array();
  for (const auto& rec : r.records) {
    json j{{"V", rec.V},
           {"simplices", rec.simplices},
           {"box_side", rec.box_side},
           {"max_planes_per_simplex", rec.max_planes_per_simplex},
           {"max_simplices_per_plane", rec.max_simplices_per_plane},
           {"unit_ball_census", rec.census},
           {"certificate", certificate_to_json(rec.certificate)}};
    if (rec.runtime_seconds) j["runtime_seconds"] = *rec.runtime_seconds;
    if (rec.width) j["width"] = width_report_to_json(*rec.width);
    records.push_back(j);
  }
  return json{{"family", {{"kind", c.family}, {"degree", c.degree}, {"seed", c.seed}}},
              {"pipeline", c.pipeline == Pipeline::sparse ? "sparse" : "width"},
              {"m", c.m},
              {"n", c.n},
              {"records", records},
              {"fit",
               {{"exponent", r.fit.slope},
                {"standard_error", r.fit.standard_error},
                {"intercept", r.fit.intercept},
                {"residuals", r.fit.residuals}}},
              {"predicted_exponents", {r.predicted_low, r.predicted_high}}};
}

}  // namespace sparsemap
