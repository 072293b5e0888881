#include "sparsemap/width.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "sparsemap/extension.hpp"

namespace sparsemap {

bool HeightFunction::injective() const {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

HeightFunction natural_heights(int V) {
  HeightFunction h;
  for (int v = 0; v < V; ++v) h.values.push_back(V > 1 ? static_cast<double>(v) / (V - 1) : 0.0);
  return h;
}

HeightFunction bfs_heights(const SimplicialComplex& Y) {
  const int V = Y.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
  for (std::size_t e : Y.of_dim(1)) {
    const auto& s = Y.simplex(e);
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  std::vector<int> rank(static_cast<std::size_t>(V), -1);
  int next = 0;
  for (int root = 0; root < V; ++root) {
    if (rank[root] >= 0) continue;
    std::deque<int> queue{root};
    rank[root] = next++;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (rank[w] < 0) {
          rank[w] = next++;
          queue.push_back(w);
        }
      }
    }
  }
  HeightFunction h;
  for (int v = 0; v < V; ++v) h.values.push_back(V > 1 ? static_cast<double>(rank[v]) / (V - 1) : 0.0);
  return h;
}

HeightFunction perturb_ties(const SimplicialComplex& Y, const HeightFunction& h, double* factor) {
  const int V = static_cast<int>(h.values.size());
  std::vector<int> order(static_cast<std::size_t>(V));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });
  HeightFunction out = h;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && h[order[j]] == h[order[i]]) ++j;
    if (j - i > 1) {
      const double here = h[order[i]];
      // spread upward into the gap, or downward for the topmost group
      double gap = j < V ? h[order[j]] - here : (i > 0 ? here - h[order[i - 1]] : 1.0);
      const double dir = j < V || i == 0 ? 1.0 : -1.0;
      if (j == V && i == 0) gap = 1.0;
      for (int t = 1; t < j - i; ++t) {
        out.values[order[i + t]] = here + dir * gap * 0.5 * t / (j - i);
      }
    }
    i = j;
  }
  if (factor) {
    const int before = measure_width(Y, h);
    const int after = measure_width(Y, out);
    *factor = before > 0 ? static_cast<double>(after) / before : 1.0;
  }
  return out;
}

namespace {

void require_graph(const SimplicialComplex& Y) {
  if (Y.dim() > 1) throw Error(Errc::NotAGraph, "width tools handle graphs only");
}

std::pair<double, double> interval_of(const Simplex& s, const HeightFunction& h) {
  double lo = h[s[0]], hi = h[s[0]];
  for (int v : s) {
    lo = std::min(lo, h[v]);
    hi = std::max(hi, h[v]);
  }
  return {lo, hi};
}

}  // namespace

int measure_width(const SimplicialComplex& Y, const HeightFunction& h, int extra_samples) {
  require_graph(Y);
  if (static_cast<int>(h.values.size()) != Y.vertex_count()) {
    throw Error(Errc::InvalidArgument, "height count differs from vertex count");
  }
  std::vector<double> heights = h.values;
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  std::vector<double> samples;
  for (std::size_t i = 0; i + 1 < heights.size(); ++i) samples.push_back(0.5 * (heights[i] + heights[i + 1]));
  for (int k = 0; k < extra_samples; ++k) samples.push_back((k + 0.5) / extra_samples);
  std::sort(samples.begin(), samples.end());
  if (samples.empty()) return 0;
  std::vector<int> diff(samples.size() + 1, 0);
  for (const auto& s : Y.simplices()) {
    const auto [lo, hi] = interval_of(s, h);
    const auto a = std::lower_bound(samples.begin(), samples.end(), lo) - samples.begin();
    const auto b = std::upper_bound(samples.begin(), samples.end(), hi) - samples.begin();
    if (a < b) {
      ++diff[a];
      --diff[b];
    }
  }
  int best = 0, run = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) best = std::max(best, run += diff[i]);
  return best;
}

int ChunkDecomposition::chunk_of(double height) const {
  int c = 0;
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) c += breakpoints[i] < height ? 1 : 0;
  return c;
}

ChunkDecomposition choose_breakpoints(const SimplicialComplex& Y, const HeightFunction& h, int W) {
  require_graph(Y);
  if (W < 1) throw Error(Errc::InvalidArgument, "chunk size must be positive");
  if (!h.injective()) throw Error(Errc::DegenerateHeights, "vertex heights are not injective");
  const int V = static_cast<int>(h.values.size());
  std::vector<int> order(static_cast<std::size_t>(V));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });

  ChunkDecomposition out;
  out.breakpoints.push_back(0.0);
  std::vector<int> current;
  for (int i = 0; i < V; ++i) {
    current.push_back(order[i]);
    if (static_cast<int>(current.size()) == W && i + 1 < V) {
      out.breakpoints.push_back(0.5 * (h[order[i]] + h[order[i + 1]]));
      out.chunks.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.chunks.push_back(std::move(current));
  if (out.chunks.size() >= 2 && 2 * static_cast<int>(out.chunks.back().size()) < W) {
    auto tail = std::move(out.chunks.back());
    out.chunks.pop_back();
    out.chunks.back().insert(out.chunks.back().end(), tail.begin(), tail.end());
    out.breakpoints.pop_back();
  }
  out.breakpoints.push_back(1.0);
  for (std::size_t i = 1; i + 1 < out.breakpoints.size(); ++i) {
    const double p = out.breakpoints[i];
    int count = 0;
    for (const auto& s : Y.simplices()) {
      const auto [lo, hi] = interval_of(s, h);
      count += lo < p && p < hi ? 1 : 0;
    }
    out.fiber_sizes.push_back(count);
  }
  return out;
}

// ---- chunk embedding ----

namespace {

ChunkEmbedding embed_chunks_at(const SimplicialComplex& Y, const std::vector<int>& vertex_chunk, int n,
                               int chunks, int max_chunk, double c, const ChunkOptions& options) {
  const int d = Y.dim();
  const int s = std::max(2, static_cast<int>(std::ceil(c * std::pow(max_chunk, 1.0 / (n - d)) - 1e-9)));
  ChunkEmbedding out;
  out.cube_side = s;
  out.chunks = chunks;
  out.cube_constant = c;
  out.max_chunk = max_chunk;

  std::vector<int> simplex_chunk(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i) {
    int lo = chunks, hi = -1;
    for (int v : Y.simplex(i)) {
      lo = std::min(lo, vertex_chunk[v]);
      hi = std::max(hi, vertex_chunk[v]);
    }
    if (hi - lo > 1) throw Error(Errc::InvalidArgument, "simplex spans non-adjacent chunks");
    simplex_chunk[i] = hi;
  }

  auto& images = out.map.images;
  images.assign(Y.size(), {});
  std::vector<std::vector<int>> members(static_cast<std::size_t>(chunks));
  for (int v = 0; v < Y.vertex_count(); ++v) members[vertex_chunk[v]].push_back(v);
  for (int i = 0; i < chunks; ++i) {
    if (members[i].empty()) continue;
    PlacementConfig config;
    config.n = n - d;
    config.m = 0;
    config.side = s - 1;
    config.vertex_count = static_cast<int>(members[i].size());
    LatticePoint origin = lattice_zero(n - d);
    origin[0] = i * s;
    config.origin = origin;
    const auto placed = greedy_place(config.vertex_count, config, TieBreak::diagonal());
    for (std::size_t q = 0; q < members[i].size(); ++q) {
      LatticePoint p = lattice_zero(n);
      p.head(n - d) = placed.coords[q];
      images[static_cast<std::size_t>(Y.index_of({members[i][q]}))].push_back(make_point(p));
    }
  }

  LevelLog log;
  log.level = d;
  log.ambient = n;
  log.sparsity = d;
  log.trial_constant = c;
  log.label_range = s - 1;
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i < chunks; ++i) {
      std::vector<std::size_t> owned;
      std::vector<FillingTask> tasks;
      for (std::size_t idx : Y.of_dim(k)) {
        if (simplex_chunk[idx] != i) continue;
        FillingTask t;
        for (const auto& face : boundary(Y.simplex(idx))) {
          const auto& img = images[static_cast<std::size_t>(Y.index_of(face))];
          t.boundary.insert(t.boundary.end(), img.begin(), img.end());
        }
        owned.push_back(idx);
        tasks.push_back(std::move(t));
      }
      if (tasks.empty()) continue;
      ExtensionFrame frame = ExtensionFrame::standard(n, n - d + k);
      frame.origin[0] = std::max(0, (i - 1) * s);
      ExtensionStats stats;
      auto filled = fill_tasks(tasks, frame, k, k, s - 1, options.base_case_cap, stats);
      log.max_label = std::max(log.max_label, stats.max_label);
      log.max_class_vertices = std::max(log.max_class_vertices, stats.max_class_vertices);
      for (std::size_t t = 0; t < owned.size(); ++t) images[owned[t]] = std::move(filled[t]);
    }
  }

  for (std::size_t idx = 0; idx < Y.size(); ++idx) {
    const int i = simplex_chunk[idx];
    BoundingBox allowed;
    LatticePoint lo = lattice_zero(n), hi = lattice_zero(n);
    lo[0] = std::max(0, (i - 1) * s);
    hi[0] = (i + 1) * s;
    for (int a = 1; a < n; ++a) hi[a] = s;
    allowed.extend(lo);
    allowed.extend(hi);
    for (const auto& p : images[idx]) {
      if (!allowed.contains(bbox(p))) out.chunk_local = false;
    }
  }

  out.map.complex = Y;
  out.map.n = n;
  out.map.m = d;
  out.map.recompute_box();
  log.side_constant = s / std::pow(max_chunk, 1.0 / (n - d));
  out.map.constants_log.push_back(log);
  return out;
}

}  // namespace

ChunkEmbedding embed_chunks(const SimplicialComplex& Y, const std::vector<int>& vertex_chunk, int n,
                            const ChunkOptions& options) {
  const int d = Y.dim();
  if (d < 0) throw Error(Errc::EmptyInput, "empty complex");
  if (n < d + 1 || n > kMaxAmbient) throw Error(Errc::UnsatisfiableParameters, "chunk embedding needs d < n <= 8");
  if (static_cast<int>(vertex_chunk.size()) != Y.vertex_count()) {
    throw Error(Errc::InvalidArgument, "one chunk index per vertex expected");
  }
  int chunks = 0;
  for (int c : vertex_chunk) {
    if (c < 0) throw Error(Errc::InvalidArgument, "negative chunk index");
    chunks = std::max(chunks, c + 1);
  }
  std::vector<int> sizes(static_cast<std::size_t>(chunks), 0);
  for (int c : vertex_chunk) ++sizes[c];
  const int max_chunk = *std::max_element(sizes.begin(), sizes.end());

  double c = options.cube_constant;
  for (int attempt = 0; attempt <= options.retry_budget; ++attempt, c *= 2) {
    try {
      auto out = embed_chunks_at(Y, vertex_chunk, n, chunks, max_chunk, c, options);
      out.retries = attempt;
      out.map.constants_log.back().retries = attempt;
      return out;
    } catch (const Error& e) {
      if (e.code() != Errc::LabelRangeExhausted && e.code() != Errc::PlacementExhausted) throw;
    }
  }
  throw Error(Errc::RetryBudgetExhausted, "cube side still too small after doubling");
}

// ---- snake ----

SnakeMap::SnakeMap(int cubes, int side, int n) : cubes_(cubes), side_(side), n_(n), grid_(1) {
  if (cubes < 1 || side < 1 || n < 1) throw Error(Errc::InvalidArgument, "snake needs positive sizes");
  auto power = [&](int k) {
    long p = 1;
    for (int j = 0; j < n && p < cubes; ++j) p *= k;
    return p;
  };
  while (power(grid_) < cubes) ++grid_;
}

LatticePoint SnakeMap::cube_position(int i) const {
  LatticePoint g = lattice_zero(n_);
  long idx = i;
  for (int j = n_ - 1; j >= 1; --j) {
    long block = 1;
    for (int q = 0; q < j; ++q) block *= grid_;
    const long c = idx / block;
    long rest = idx % block;
    g[j] = static_cast<int>(c);
    if (c % 2 == 1) rest = block - 1 - rest;
    idx = rest;
  }
  g[0] = static_cast<int>(idx);
  return g;
}

bool SnakeMap::reversed(int i) const {
  long idx = i;
  bool flip = false;
  for (int j = n_ - 1; j >= 1; --j) {
    long block = 1;
    for (int q = 0; q < j; ++q) block *= grid_;
    const long c = idx / block;
    long rest = idx % block;
    if (c % 2 == 1) {
      rest = block - 1 - rest;
      flip = !flip;
    }
    idx = rest;
  }
  return flip;
}

int SnakeMap::cube_of(double x0) const {
  const int i = static_cast<int>(std::floor(x0 / side_));
  return std::clamp(i, 0, cubes_ - 1);
}

CubicalCell SnakeMap::relocate(const CubicalCell& c) const {
  const int i = cube_of(c.anchor[0]);
  CubicalCell out = c;
  int local = c.anchor[0] - i * side_;
  if (reversed(i)) local = has_axis(c.axes, 0) ? side_ - 1 - local : side_ - local;
  const LatticePoint g = cube_position(i);
  out.anchor[0] = g[0] * side_ + local;
  for (int a = 1; a < n_; ++a) out.anchor[a] = g[a] * side_ + c.anchor[a];
  return out;
}

RealPoint SnakeMap::map_point(const RealPoint& p) const {
  const int i = cube_of(p[0]);
  RealPoint out = p;
  double local = p[0] - i * side_;
  if (reversed(i)) local = side_ - local;
  const LatticePoint g = cube_position(i);
  out[0] = g[0] * side_ + local;
  for (int a = 1; a < n_; ++a) out[a] = g[a] * side_ + p[a];
  return out;
}

bool SnakeMap::turns_after(int i) const {
  if (i < 0 || i + 1 >= cubes_) return false;
  const LatticePoint a = cube_position(i), b = cube_position(i + 1);
  return a[0] == b[0];
}

std::vector<CubicalCell> SnakeMap::bridge(const LatticePoint& p) const {
  const int i = p[0] / side_ - 1;
  if (p[0] % side_ != 0 || !turns_after(i)) return {};
  const LatticePoint ga = cube_position(i), gb = cube_position(i + 1);
  int j = 1;
  while (ga[j] == gb[j]) ++j;
  LatticePoint x = p;
  x[0] = ga[0] * side_ + (reversed(i) ? 0 : side_);
  for (int a = 1; a < n_; ++a) x[a] = ga[a] * side_ + p[a];
  const int out = reversed(i) ? -1 : 1;
  const int depth = p[j] + 1;
  const int step = gb[j] > ga[j] ? 1 : -1;

  std::vector<CubicalCell> cells;
  auto walk = [&](int axis, int dir, int count) {
    for (int q = 0; q < count; ++q) {
      LatticePoint next = x;
      next[axis] += dir;
      CubicalCell c{dir > 0 ? x : next, axis_bit(axis)};
      cells.push_back(std::move(c));
      x = next;
    }
  };
  walk(0, out, depth);
  walk(j, step, side_);
  walk(0, -out, depth);
  return cells;
}

double SnakeMap::sampled_distortion() const {
  // half-unit offsets of length <= 1, one of each +/- pair
  std::vector<Eigen::VectorXi> offsets;
  Eigen::VectorXi delta = Eigen::VectorXi::Constant(n_, -2);
  while (true) {
    const int norm2 = delta.squaredNorm();
    bool positive = false;
    for (int a = 0; a < n_; ++a) {
      if (delta[a] != 0) {
        positive = delta[a] > 0;
        break;
      }
    }
    if (norm2 > 0 && norm2 <= 4 && positive) offsets.push_back(delta);
    int a = 0;
    while (a < n_ && delta[a] == 2) delta[a++] = -2;
    if (a == n_) break;
    ++delta[a];
  }
  // grid points 2x in half units: axis 0 in [0, 2 N s - 1], others [0, 2 s - 1]
  Eigen::VectorXi hi = Eigen::VectorXi::Constant(n_, 2 * side_ - 1);
  hi[0] = 2 * cubes_ * side_ - 1;
  Eigen::VectorXi x = Eigen::VectorXi::Zero(n_);
  double worst = 0;
  while (true) {
    const RealPoint p = x.cast<double>() * 0.5;
    const RealPoint sp = map_point(p);
    for (const auto& o : offsets) {
      const Eigen::VectorXi y = x + o;
      if ((y.array() < 0).any() || (y.array() > hi.array()).any()) continue;
      const RealPoint q = y.cast<double>() * 0.5;
      worst = std::max(worst, (map_point(q) - sp).norm() / (q - p).norm());
    }
    int a = 0;
    while (a < n_ && x[a] == hi[a]) x[a++] = 0;
    if (a == n_) break;
    ++x[a];
  }
  return worst;
}

// ---- pipeline ----

namespace {

// Relocates a pre-snake map; `groups[i]` lists the pre-snake simplices whose
// images make up simplex i of `Y`.
LatticeMap snake_images(const SimplicialComplex& Y, const LatticeMap& pre,
                        const std::vector<std::vector<std::size_t>>& groups, const SnakeMap& S,
                        WidthReport& report) {
  const int s = S.side();
  std::vector<std::vector<CubicalCell>> cells(Y.size());
  std::set<CubicalCell> bridged;  // 0-cells at the crossing points
  int low = 0;
  for (std::size_t i = 0; i < Y.size(); ++i) {
    auto& mine = cells[i];
    for (std::size_t src : groups[i]) {
      for (const auto& piece : pre.images[src]) {
        for (const auto& c : lattice_cells(piece)) {
          mine.push_back(S.relocate(c));
          // cell ending on a cube face where the fold turns
          if (!has_axis(c.axes, 0) || (c.anchor[0] + 1) % s != 0) continue;
          if (!S.turns_after((c.anchor[0] + 1) / s - 1)) continue;
          if (c.dim() > 1) {
            report.continuous = false;
            continue;
          }
          LatticePoint p = c.anchor;
          p[0] += 1;
          for (auto& q : S.bridge(p)) mine.push_back(std::move(q));
          bridged.insert(CubicalCell{p, 0});
        }
      }
    }
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    for (const auto& c : mine) low = std::min(low, c.anchor[0]);
  }
  report.bridges = static_cast<int>(bridged.size());

  LatticeMap out;
  out.complex = Y;
  out.n = pre.n;
  out.m = pre.m;
  out.constants_log = pre.constants_log;
  out.images.assign(Y.size(), {});
  for (std::size_t i = 0; i < Y.size(); ++i) {
    // bridges on the low side stick out below zero
    for (auto& c : cells[i]) c.anchor[0] -= low;
    if (cells[i].size() == 1 && cells[i][0].dim() == 0) {
      out.images[i].push_back(make_point(cells[i][0].anchor));
    } else if (!cells[i].empty()) {
      out.images[i].push_back(CubicalChain{pre.n, std::move(cells[i])});
    }
  }
  out.recompute_box();
  return out;
}

WidthResult finish(const SimplicialComplex& Y, const ChunkEmbedding& ce,
                   const std::vector<std::vector<std::size_t>>& groups, const WidthOptions& options,
                   WidthReport report) {
  const SnakeMap S(ce.chunks, ce.cube_side, ce.map.n);
  WidthResult result;
  result.map = snake_images(Y, ce.map, groups, S, report);
  report.chunks = ce.chunks;
  report.cube_side = ce.cube_side;
  report.cube_constant = ce.cube_constant;
  report.retries = ce.retries;
  report.prism_length = ce.chunks * ce.cube_side;
  report.final_side = result.map.achieved_box.side();
  report.census_max = unit_ball_census(result.map);
  report.chunk_local = ce.chunk_local;
  if (options.measure_distortion) report.distortion = S.sampled_distortion();
  report.certificate = verify(result.map);
  result.report = std::move(report);
  return result;
}

}  // namespace

WidthResult width_embed(const SimplicialComplex& Y, const HeightFunction& h, int n, const WidthOptions& options) {
  require_graph(Y);
  if (Y.empty()) throw Error(Errc::EmptyInput, "empty complex");
  if (n < Y.dim() + 1) throw Error(Errc::UnsatisfiableParameters, "width embedding needs n > d");
  if (static_cast<int>(h.values.size()) != Y.vertex_count()) {
    throw Error(Errc::InvalidArgument, "height count differs from vertex count");
  }
  WidthReport report;
  const HeightFunction hp = perturb_ties(Y, h, &report.perturbation_factor);
  report.width = measure_width(Y, hp, options.extra_samples);
  report.chunk_target = std::max(1, static_cast<int>(std::lround(options.chunk_factor * report.width)));
  const auto dec = choose_breakpoints(Y, hp, report.chunk_target);
  for (const auto& c : dec.chunks) report.chunk_sizes.push_back(static_cast<int>(c.size()));

  // cut every edge at the interior breakpoints it crosses
  std::map<Simplex, std::vector<double>> cuts;
  std::map<Simplex, std::vector<int>> cut_index;
  for (std::size_t e : Y.of_dim(1)) {
    const auto& s = Y.simplex(e);
    const double a = hp[s[0]], b = hp[s[1]];
    for (std::size_t i = 1; i + 1 < dec.breakpoints.size(); ++i) {
      const double p = dec.breakpoints[i];
      if (std::min(a, b) < p && p < std::max(a, b)) {
        cuts[s].push_back((p - a) / (b - a));
        cut_index[s].push_back(static_cast<int>(i));
      }
    }
  }
  const Subdivision sub = Y.dim() == 1 ? subdivide_edges(Y, cuts) : Subdivision{Y, {}, {}, {}};
  std::vector<int> vchunk(static_cast<std::size_t>(sub.complex.vertex_count()));
  for (int v = 0; v < Y.vertex_count(); ++v) vchunk[v] = dec.chunk_of(hp[v]);
  {
    // new vertices were numbered edge by edge in increasing fraction
    int next = Y.vertex_count();
    for (std::size_t e : Y.of_dim(1)) {
      const auto& s = Y.simplex(e);
      auto it = cut_index.find(s);
      if (it == cut_index.end()) continue;
      std::vector<std::pair<double, int>> order;
      for (std::size_t q = 0; q < it->second.size(); ++q) order.emplace_back(cuts[s][q], it->second[q]);
      std::sort(order.begin(), order.end());
      for (const auto& [frac, bp] : order) vchunk[next++] = bp - 1;
    }
  }

  const auto ce = embed_chunks(sub.complex, vchunk, n, options.chunk);
  std::vector<std::vector<std::size_t>> groups(Y.size());
  for (std::size_t i = 0; i < sub.complex.size(); ++i) {
    const auto& s = sub.complex.simplex(i);
    if (s.size() == 1) {
      if (s[0] < Y.vertex_count()) groups[static_cast<std::size_t>(Y.index_of(s))].push_back(i);
    } else {
      groups[static_cast<std::size_t>(Y.index_of(sub.parent_edge.at(s)))].push_back(i);
    }
  }
  return finish(Y, ce, groups, options, std::move(report));
}

WidthResult width_embed_chunked(const SimplicialComplex& Y, const std::vector<int>& vertex_chunk, int n,
                                const WidthOptions& options) {
  const auto ce = embed_chunks(Y, vertex_chunk, n, options.chunk);
  std::vector<std::vector<std::size_t>> groups(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i) groups[i] = {i};
  WidthReport report;
  std::vector<int> sizes(static_cast<std::size_t>(ce.chunks), 0);
  for (int c : vertex_chunk) ++sizes[c];
  report.chunk_sizes = sizes;
  return finish(Y, ce, groups, options, std::move(report));
}

}  // namespace sparsemap
