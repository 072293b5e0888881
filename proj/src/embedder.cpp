#include "sparsemap/embedder.hpp"

#include <cmath>

#include "sparsemap/verifier.hpp"

namespace sparsemap {

namespace {

void check_parameters(const SimplicialComplex& Y, int m, int n) {
  const int d = std::max(0, Y.dim());
  if (n < 1 || n > kMaxAmbient || m < d || m > n) {
    throw Error(Errc::UnsatisfiableParameters, "need 0 <= d <= m <= n <= 8, got d=" + std::to_string(d) +
                                                   " m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

}  // namespace

LatticeMap embed_at(const SimplicialComplex& Y, int m, int n, double trial_constant, const EmbedOptions& options) {
  check_parameters(Y, m, n);
  LatticeMap out;
  out.complex = Y;
  out.n = n;
  out.m = m;
  if (Y.empty()) {
    out.achieved_box.extend(lattice_zero(n));
    return out;
  }
  const int d = Y.dim();
  const int V = Y.vertex_count();

  // level 0: injective when m = n, where no sparser placement exists
  const int n0 = n - d;
  const int m0 = m < n ? m - d : 0;
  VertexPlacement placed;
  if (n0 > 0) {
    placed = greedy_place(V, make_placement_config(n0, m0, V), options.tie_break);
  } else {
    placed.coords.assign(static_cast<std::size_t>(V), LatticePoint(0));
  }

  out.images.assign(Y.size(), {});
  for (int v = 0; v < V; ++v) {
    LatticePoint p = lattice_zero(n);
    p.head(n0) = placed.coords[v];
    out.images[static_cast<std::size_t>(Y.index_of({v}))].push_back(make_point(p));
  }
  LevelLog level0;
  level0.level = 0;
  level0.ambient = n0;
  level0.sparsity = m0;
  level0.trial_constant = trial_constant;
  level0.side_constant = n0 > m0 ? placed.side / std::pow(V, 1.0 / (n0 - m0)) : 0;
  out.constants_log.push_back(level0);

  const int R = m < n ? static_cast<int>(std::ceil(trial_constant * std::pow(V, 1.0 / (n - m)) - 1e-9)) : 1;
  for (int k = 1; k <= d; ++k) {
    SkeletonMap f{Y, k - 1, n, m - d + k - 1, std::move(out.images)};
    ExtensionOptions eo;
    eo.label_range = R;
    eo.active_axes = n - d + k;
    eo.order_seed = options.order_seed;
    eo.base_case_cap = options.base_case_cap;
    LevelLog log;
    log.trial_constant = trial_constant;
    auto F = extend(f, eo, &log);
    out.images = std::move(F.images);
    BoundingBox box;
    for (const auto& pieces : out.images) box.extend(bbox(pieces));
    log.side_constant = box.side() / std::pow(V, 1.0 / std::max(1, n - m));
    out.constants_log.push_back(log);
  }
  out.recompute_box();
  const auto cert = verify(out);
  if (!cert.skeletal_ok) throw Error(Errc::SparsityViolated, "constructed map fails skeletal containment");
  return out;
}

LatticeMap embed_with_retries(const SimplicialComplex& Y, int m, int n, int retry_budget, const EmbedOptions& options) {
  if (retry_budget < 0) throw Error(Errc::InvalidArgument, "negative retry budget");
  double c = options.trial_constant;
  for (int attempt = 0; attempt <= retry_budget; ++attempt, c *= 2) {
    try {
      auto map = embed_at(Y, m, n, c, options);
      for (auto& log : map.constants_log) log.retries = attempt;
      return map;
    } catch (const Error& e) {
      if (e.code() != Errc::LabelRangeExhausted) throw;
    }
  }
  throw Error(Errc::RetryBudgetExhausted,
              "label range still exhausted after " + std::to_string(retry_budget) + " doublings");
}

LatticeMap embed(const SimplicialComplex& Y, int m, int n, const EmbedOptions& options) {
  try {
    return embed_with_retries(Y, m, n, options.retry_budget, options);
  } catch (const Error& e) {
    if (e.code() == Errc::RetryBudgetExhausted) throw Error(Errc::LabelRangeExhausted, e.what());
    throw;
  }
}

}  // namespace sparsemap
