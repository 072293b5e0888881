#pragma once

// Scaling sweeps over generated families and the log-log exponent fit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsemap/embedder.hpp"
#include "sparsemap/io.hpp"

namespace sparsemap {

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  double standard_error = 0;
  std::vector<double> residuals;
};

/// Least squares of log(side) against log(V); needs at least three points.
ExponentFit fit_exponent(const std::vector<double>& V, const std::vector<double>& side);

enum class Pipeline { sparse, width };

struct BenchConfig {
  std::string family = "random-regular";
  int degree = 4;
  std::vector<int> sizes;
  int m = 1;
  int n = 3;
  std::uint64_t seed = 1;
  Pipeline pipeline = Pipeline::sparse;
  /// "natural" or "bfs"; empty picks natural for paths and cycles, bfs otherwise
  std::string heights;
  bool with_timing = false;
  EmbedOptions embed;
  WidthOptions width;
};

struct BenchRecord {
  int V = 0;
  int simplices = 0;
  int box_side = 0;
  int max_planes_per_simplex = 0;
  int max_simplices_per_plane = 0;
  int census = 0;
  std::optional<double> runtime_seconds;
  SparsityCertificate certificate;
  /// width pipeline only
  std::optional<WidthReport> width;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRecord> records;
  ExponentFit fit;
  /// exponents predicted at the two ends of the width range (sparse: both 1/(n-m))
  double predicted_low = 0;
  double predicted_high = 0;
};

BenchReport run_bench(const BenchConfig& config);

json bench_report_to_json(const BenchReport& r);

}  // namespace sparsemap
