#include "sparsemap/extension.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

namespace sparsemap {

SkeletonMap restrict_to(const LatticeMap& map, int k) {
  SkeletonMap f{map.complex, k, map.n, map.m, map.images};
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    if (simplex_dim(f.complex.simplex(i)) > k) f.images[i].clear();
  }
  return f;
}

ExtensionFrame ExtensionFrame::standard(int n, int active) {
  ExtensionFrame f;
  for (int a = 0; a < active; ++a) f.axes.push_back(a);
  f.origin = lattice_zero(n);
  return f;
}

AxisMask ExtensionFrame::mask() const {
  AxisMask m = 0;
  for (int a : axes) m |= axis_bit(a);
  return m;
}

ExtensionFrame ExtensionFrame::drop_last(int height) const {
  ExtensionFrame f = *this;
  f.origin[axes.back()] = height;
  f.axes.pop_back();
  return f;
}

int Labeling::label_of(std::size_t simplex) const {
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (simplices[i] == simplex) return labels[i];
  }
  return 0;
}

int Labeling::max_label() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

namespace {

void append(std::vector<GeomPiece>& out, std::vector<GeomPiece> more, bool drop_points) {
  for (auto& p : more) {
    if (drop_points && p.dim() == 0) continue;
    out.push_back(std::move(p));
  }
}

PlaneSet boundary_planes(const std::vector<GeomPiece>& boundary, int m, int d, AxisMask allowed) {
  PlaneSet planes;
  if (d < 1) return planes;
  for (const auto& b : boundary) {
    if (b.dim() != d - 1) continue;
    planes.merge(planes_hit_in_dim(b, m, d - 1, allowed).planes);
  }
  return planes;
}

// f_j must meet every (m-1)-plane of the subframe in dimension d-1 for at most one simplex.
void check_class_sparsity(const std::vector<FillingTask>& tasks, const ExtensionFrame& sub, int m,
                          int d) {
  std::unordered_map<MPlane, std::size_t, PlaneHash> owner;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    for (const auto& h : boundary_planes(tasks[t].boundary, m - 1, d, sub.mask())) {
      auto [it, fresh] = owner.emplace(h, t);
      if (!fresh && it->second != t) {
        throw Error(Errc::SparsityViolated, "two boundaries of one label class share an (m-1)-plane");
      }
    }
  }
}

std::vector<std::vector<GeomPiece>> fill_level(const std::vector<FillingTask>& tasks,
                                               const ExtensionFrame& frame, int m, int d, int R,
                                               int cap, ExtensionStats& stats, bool outermost) {
  const int k = frame.size();
  std::vector<std::vector<GeomPiece>> out(tasks.size());
  if (tasks.empty()) return out;
  if (k < m || m < d) throw Error(Errc::RecursionBaseMissing, "frame smaller than the sparsity");
  if (k == m) {
    if (static_cast<int>(tasks.size()) * (d + 1) > cap) {
      throw Error(Errc::SizePreconditionViolated,
                  std::to_string(tasks.size()) + " boundaries exceed the base-case cap");
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) out[t] = base_case_filling(tasks[t].boundary, d, frame);
    return out;
  }

  const auto labels = label_tasks(tasks, frame, m, d, R);
  const int last = frame.axes[k - 1];
  const int sec = frame.axes[k - 2];
  const int base = frame.origin[last];

  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    classes[labels[t]].push_back(t);
    stats.max_label = std::max(stats.max_label, labels[t]);
  }

  for (const auto& [j, members] : classes) {
    const int h = base + j;
    std::vector<FillingTask> sub(members.size());
    for (std::size_t s = 0; s < members.size(); ++s) {
      const auto t = members[s];
      auto& pieces = out[t];
      for (const auto& b : tasks[t].boundary) {
        auto lift = prism_between(b, last, base, h);
        if (lift.dim() > 0) pieces.push_back(std::move(lift));
        const auto top = project(b, last, h);
        append(pieces, sweep_to(top, sec, frame.origin[sec]), true);
        sub[s].boundary.push_back(project(top, sec, frame.origin[sec]));
      }
    }
    const auto subframe = frame.drop_last(h);
    check_class_sparsity(sub, subframe, m, d);
    if (outermost) {
      stats.max_class_vertices = std::max(stats.max_class_vertices, static_cast<int>(members.size()) * (d + 1));
    }
    auto filled = fill_level(sub, subframe, m, d, R, cap, stats, false);
    for (std::size_t s = 0; s < members.size(); ++s) {
      append(out[members[s]], std::move(filled[s]), false);
    }
  }
  return out;
}

std::vector<std::size_t> processing_order(const SimplicialComplex& Y, int d,
                                          const std::optional<std::uint64_t>& seed) {
  auto order = Y.of_dim(d);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

std::vector<FillingTask> tasks_of(const SkeletonMap& f, const std::vector<std::size_t>& order) {
  std::vector<FillingTask> tasks;
  tasks.reserve(order.size());
  for (std::size_t s : order) {
    FillingTask t;
    for (const auto& face : boundary(f.complex.simplex(s))) {
      const auto idx = f.complex.index_of(face);
      const auto& img = f.images.at(static_cast<std::size_t>(idx));
      if (img.empty()) throw Error(Errc::InvalidArgument, "face without an image");
      t.boundary.insert(t.boundary.end(), img.begin(), img.end());
    }
    tasks.push_back(std::move(t));
  }
  return tasks;
}

struct Setup {
  int n, m, d, active, R;
  ExtensionFrame frame;
};

Setup setup(const SkeletonMap& f, const ExtensionOptions& options) {
  Setup s;
  s.n = f.n;
  s.m = f.m + 1;
  s.d = f.k + 1;
  s.active = options.active_axes > 0 ? options.active_axes : f.n;
  if (s.active > s.n || s.m > s.active || s.d > s.m || s.m < 1) {
    throw Error(Errc::UnsatisfiableParameters, "extension needs 1 <= d <= m <= active <= n");
  }
  if (f.images.size() != f.complex.size()) throw Error(Errc::InvalidArgument, "image table size mismatch");
  for (const auto& pieces : f.images) {
    for (const auto& p : pieces) {
      if (p.ambient() != s.n) throw Error(Errc::InvalidArgument, "piece has the wrong ambient dimension");
      for (int a = s.active; a < s.n; ++a) {
        if (!lies_in_hyperplane(p, a, 0)) throw Error(Errc::InvalidArgument, "piece leaves the active axes");
      }
    }
  }
  const int V = std::max(1, f.complex.vertex_count());
  s.R = options.label_range;
  if (s.R <= 0) {
    s.R = s.active > s.m ? static_cast<int>(std::ceil(std::pow(V, 1.0 / (s.active - s.m)) - 1e-9)) : 1;
  }
  s.R = std::max(1, s.R);
  s.frame = ExtensionFrame::standard(s.n, s.active);
  return s;
}

}  // namespace

std::vector<GeomPiece> base_case_filling(const std::vector<GeomPiece>& boundary, int d,
                                         const ExtensionFrame& frame) {
  const int k = frame.size();
  if (d < 1 || d > k) throw Error(Errc::InvalidArgument, "base case needs 1 <= d <= frame size");
  std::vector<GeomPiece> out;
  if (boundary.empty()) return out;
  std::vector<GeomPiece> cur = boundary;
  for (int i = 0; i <= k - d; ++i) {
    const int axis = frame.axes[i];
    const int target = frame.origin[axis];
    std::vector<GeomPiece> next;
    for (const auto& b : cur) {
      append(out, sweep_to(b, axis, target), true);
      next.push_back(project(b, axis, target));
    }
    cur = std::move(next);
  }
  std::vector<LatticePoint> corners;
  for (const auto& b : cur) {
    for (const auto& c : lattice_cells(b)) corners.push_back(c.anchor);
  }
  const auto lex = [](const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  const LatticePoint apex = *std::min_element(corners.begin(), corners.end(), lex);
  out.push_back(cone_over(merge_pieces(cur), to_real(apex)));
  return out;
}

std::vector<int> label_tasks(const std::vector<FillingTask>& tasks, const ExtensionFrame& frame, int m,
                             int d, int R) {
  std::unordered_map<MPlane, std::vector<int>, PlaneHash> used;
  std::vector<int> labels(tasks.size(), 0);
  std::vector<char> bad(static_cast<std::size_t>(R) + 2);
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto planes = boundary_planes(tasks[t].boundary, m, d, frame.mask());
    std::fill(bad.begin(), bad.end(), 0);
    for (const auto& h : planes) {
      if (auto it = used.find(h); it != used.end()) {
        for (int l : it->second) bad[l] = 1;
      }
    }
    int label = 1;
    while (label <= R && bad[label]) ++label;
    if (label > R) {
      throw Error(Errc::LabelRangeExhausted, "no free label in [1, " + std::to_string(R) + "]");
    }
    labels[t] = label;
    for (const auto& h : planes) used[h].push_back(label);
  }
  return labels;
}

std::vector<std::vector<GeomPiece>> fill_tasks(const std::vector<FillingTask>& tasks,
                                               const ExtensionFrame& frame, int m, int d, int R,
                                               int base_case_cap, ExtensionStats& stats) {
  return fill_level(tasks, frame, m, d, R, base_case_cap, stats, true);
}

SkeletonMap fill_base_case(const SkeletonMap& f, const ExtensionOptions& options) {
  const Setup s = setup(f, options);
  if (s.m != s.active) throw Error(Errc::UnsatisfiableParameters, "base case needs m = n");
  if (f.complex.vertex_count() > options.base_case_cap) {
    throw Error(Errc::SizePreconditionViolated,
                "V = " + std::to_string(f.complex.vertex_count()) + " exceeds the base-case cap " +
                    std::to_string(options.base_case_cap));
  }
  SkeletonMap F = f;
  F.k = s.d;
  F.m = s.m;
  const auto order = processing_order(f.complex, s.d, std::nullopt);
  const auto tasks = tasks_of(f, order);
  for (std::size_t t = 0; t < order.size(); ++t) {
    F.images[order[t]] = base_case_filling(tasks[t].boundary, s.d, s.frame);
  }
  return F;
}

Labeling label_simplices(const SkeletonMap& f, int R, const ExtensionOptions& options) {
  ExtensionOptions o = options;
  o.label_range = R;
  const Setup s = setup(f, o);
  Labeling L;
  L.R = R;
  L.simplices = processing_order(f.complex, s.d, options.order_seed);
  L.labels = label_tasks(tasks_of(f, L.simplices), s.frame, s.m, s.d, R);
  return L;
}

LabelClassComplex build_label_class(const SkeletonMap& f, const Labeling& L, int j,
                                    const ExtensionOptions& options) {
  const Setup s = setup(f, options);
  if (s.active < 2) throw Error(Errc::InvalidArgument, "label classes need two active axes");
  const int last = s.frame.axes.back();
  const int sec = s.frame.axes[s.frame.axes.size() - 2];

  LabelClassComplex out;
  out.j = j;
  std::vector<Simplex> raw;
  std::vector<Simplex> original;  // original face for each raw facet
  int next_vertex = 0;
  for (std::size_t i = 0; i < L.simplices.size(); ++i) {
    if (L.labels[i] != j) continue;
    const Simplex& sigma = f.complex.simplex(L.simplices[i]);
    for (const auto& face : boundary(sigma)) {
      Simplex copy;
      for (int v : face) {
        const auto pos = std::find(sigma.begin(), sigma.end(), v) - sigma.begin();
        copy.push_back(next_vertex + static_cast<int>(pos));
      }
      raw.push_back(copy);
      original.push_back(face);
    }
    for (std::size_t v = 0; v < sigma.size(); ++v) out.source.push_back(L.simplices[i]);
    next_vertex += static_cast<int>(sigma.size());
  }
  if (raw.empty()) return out;
  out.domain = build_complex(raw, next_vertex);

  // domain vertex -> original vertex
  std::vector<int> back(static_cast<std::size_t>(next_vertex));
  for (std::size_t r = 0; r < raw.size(); ++r) {
    for (std::size_t q = 0; q < raw[r].size(); ++q) back[raw[r][q]] = original[r][q];
  }
  const auto lifted = [&](const GeomPiece& p) { return project(project(p, last, j), sec, 0); };
  out.images.resize(out.domain.size());
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    Simplex orig;
    for (int v : out.domain.simplex(i)) orig.push_back(back[v]);
    std::sort(orig.begin(), orig.end());
    const auto idx = f.complex.index_of(orig);
    for (const auto& p : f.images.at(static_cast<std::size_t>(idx))) out.images[i].push_back(lifted(p));
  }

  // one task per source simplex, boundary = images of its (d-1)-faces
  std::map<std::size_t, FillingTask> per_source;
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    const auto& simplex = out.domain.simplex(i);
    if (simplex_dim(simplex) != s.d - 1) continue;
    auto& t = per_source[out.source[simplex[0]]];
    t.boundary.insert(t.boundary.end(), out.images[i].begin(), out.images[i].end());
  }
  std::vector<FillingTask> tasks;
  for (auto& [src, t] : per_source) tasks.push_back(std::move(t));
  check_class_sparsity(tasks, s.frame.drop_last(j), s.m, s.d);
  return out;
}

SkeletonMap extend(const SkeletonMap& f, const ExtensionOptions& options, LevelLog* log) {
  const Setup s = setup(f, options);
  SkeletonMap F;
  if (s.m == s.active) {
    F = fill_base_case(f, options);
  } else {
    F = f;
    F.k = s.d;
    F.m = s.m;
    const auto order = processing_order(f.complex, s.d, options.order_seed);
    const auto tasks = tasks_of(f, order);
    ExtensionStats stats;
    auto fillings = fill_tasks(tasks, s.frame, s.m, s.d, s.R, options.base_case_cap, stats);

    for (std::size_t t = 0; t < order.size(); ++t) {
      const auto before = boundary_planes(tasks[t].boundary, s.m - 1, s.d, s.frame.mask());
      PlaneSet after;
      for (const auto& p : fillings[t]) {
        if (p.dim() == s.d) after.merge(planes_hit_in_dim(p, s.m, s.d, s.frame.mask()).planes);
      }
      if (!before.empty()) {
        stats.plane_growth = std::max(stats.plane_growth, static_cast<double>(after.size()) / before.size());
      }
      F.images[order[t]] = std::move(fillings[t]);
    }
    if (log) {
      const double V = std::max(1, f.complex.vertex_count());
      log->max_label = stats.max_label;
      log->max_class_vertices = stats.max_class_vertices;
      log->class_vertex_constant =
          stats.max_class_vertices / std::pow(V, static_cast<double>(s.active - s.m - 1) / (s.active - s.m));
      log->plane_growth = stats.plane_growth;
    }
  }
  if (log) {
    log->level = s.d;
    log->ambient = s.active;
    log->sparsity = s.m;
    log->label_range = s.R;
  }
  return F;
}

}  // namespace sparsemap
