#include "sparsemap/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace sparsemap {

namespace {

long double ipow(long double base, int e) {
  long double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Masks with exactly k of the n low bits set.
std::vector<AxisMask> masks_of_size(int n, int k) {
  std::vector<AxisMask> out;
  for (AxisMask s = 0; s < (AxisMask{1} << n); ++s) {
    if (popcount(s) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

int PlacementConfig::box_side() const {
  if (side) return *side;
  if (m >= n) {
    if (vertex_count > 1) throw Error(Errc::MEqualsN, "m = n admits a single vertex");
    return 0;
  }
  const int k = n - m;
  const long double target = ipow(side_constant, k) * vertex_count;
  auto s = static_cast<long long>(std::ceil(side_constant * std::pow(static_cast<double>(vertex_count), 1.0 / k)));
  while (s > 0 && ipow(static_cast<long double>(s - 1), k) >= target) --s;
  while (ipow(static_cast<long double>(s), k) < target) ++s;
  return static_cast<int>(s);
}

int min_constant(int n, int m) {
  if (m < 0 || n < 0 || m > n) throw Error(Errc::InvalidArgument, "need 0 <= m <= n");
  if (m == n) throw Error(Errc::MEqualsN, "no finite box works for unbounded V when m = n");
  const long long b = binomial(n, m);
  int c = 1;
  while (ipow(c, n - m) <= b) ++c;
  return c;
}

PlacementConfig make_placement_config(int n, int m, int vertex_count) {
  if (m < 0 || m > n || n > kMaxAmbient) throw Error(Errc::InvalidArgument, "need 0 <= m <= n <= 8");
  PlacementConfig c;
  c.n = n;
  c.m = m;
  c.vertex_count = vertex_count;
  if (m == n) {
    if (vertex_count > 1) throw Error(Errc::MEqualsN, "m = n admits a single vertex");
    c.side_constant = 1;
  } else {
    c.side_constant = min_constant(n, m);
  }
  return c;
}

std::vector<int> TieBreak::axis_order(int axis, int side) const {
  std::vector<int> values(static_cast<std::size_t>(side) + 1);
  std::iota(values.begin(), values.end(), 0);
  if (seed_) {
    std::mt19937_64 rng(*seed_ * 1000003ull + static_cast<std::uint64_t>(axis));
    std::shuffle(values.begin(), values.end(), rng);
  }
  return values;
}

VertexPlacement greedy_place(int vertex_count, const PlacementConfig& config, const TieBreak& tie_break) {
  const int n = config.n, m = config.m;
  if (m < 0 || m > n || n > kMaxAmbient) throw Error(Errc::InvalidArgument, "need 0 <= m <= n <= 8");
  PlacementConfig cfg = config;
  cfg.vertex_count = vertex_count;
  const int side = cfg.box_side();
  const LatticePoint origin = config.origin.value_or(lattice_zero(n));

  VertexPlacement out;
  out.n = n;
  out.m = m;
  out.side_constant = config.side_constant;
  out.side = side;
  if (vertex_count <= 0) return out;

  std::vector<std::vector<int>> order(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) order[a] = tie_break.axis_order(a, side);

  // Planes through a point are MPlane(F, p) with |F| = m.  The fixed axes T of
  // such a plane are known once every axis in T is assigned; checks[t] lists the
  // free masks F whose last fixed axis is t - 1 (checks[0]: T empty).
  const AxisMask full = all_axes(n);
  std::vector<std::vector<AxisMask>> checks(static_cast<std::size_t>(n) + 1);
  for (AxisMask F : masks_of_size(n, m)) {
    const AxisMask T = full & ~F;
    const int t = T == 0 ? 0 : 32 - __builtin_clz(T);
    checks[t].push_back(F);
  }
  const auto plane_masks = masks_of_size(n, m);

  PlaneSet occupied;
  LatticePoint p = lattice_zero(n);

  auto blocked_at = [&](int t) {
    for (AxisMask F : checks[t]) {
      if (occupied.contains(MPlane(F, p))) return true;
    }
    return false;
  };

  // depth-first search for the tie-break-least unblocked point
  auto search = [&](auto&& self, int axis) -> bool {
    if (blocked_at(axis)) return false;
    if (axis == n) return true;
    for (int v : order[axis]) {
      p[axis] = origin[axis] + v;
      if (self(self, axis + 1)) return true;
    }
    p[axis] = 0;
    return false;
  };

  // diagonal order: residue class r, then offsets of axes 0..n-2; blocked
  // points stay blocked, so one cursor serves every vertex
  int r = 0;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  auto next_diagonal = [&]() -> bool {
    while (r <= side) {
      int sum = 0;
      for (int a = 0; a + 1 < n; ++a) sum += idx[a];
      for (int a = 0; a + 1 < n; ++a) p[a] = origin[a] + idx[a];
      p[n - 1] = origin[n - 1] + ((r - sum) % (side + 1) + side + 1) % (side + 1);
      int a = n - 2;
      while (a >= 0 && idx[a] == side) idx[a--] = 0;
      if (a < 0) {
        ++r;
      } else {
        ++idx[a];
      }
      if (!blocked_at(n) && !blocked_at(0)) {
        bool free = true;
        for (int t = 1; t < n && free; ++t) free = !blocked_at(t);
        if (free) return true;
      }
    }
    return false;
  };

  for (int k = 0; k < vertex_count; ++k) {
    p = lattice_zero(n);
    const bool found = tie_break.is_diagonal() ? next_diagonal() : search(search, 0);
    if (!found) {
      throw Error(Errc::PlacementExhausted, "no free lattice point for vertex " + std::to_string(k));
    }
    for (AxisMask F : plane_masks) {
      MPlane plane(F, p);
      const bool fresh = occupied.insert(plane).second;
      if (!fresh) throw Error(Errc::PlacementExhausted, "greedy step reused an occupied plane");
      out.occupied_planes.emplace_back(plane, k);
    }
    out.coords.push_back(p);
  }
  return out;
}

bool check_placement(const VertexPlacement& p, const PlacementConfig& config) {
  const int n = config.n, m = config.m;
  const int side = config.side ? *config.side : p.side;
  const LatticePoint origin = config.origin.value_or(lattice_zero(n));
  for (const auto& q : p.coords) {
    if (q.size() != n) return false;
    for (int a = 0; a < n; ++a) {
      if (q[a] < origin[a] || q[a] > origin[a] + side) return false;
    }
  }
  // pairwise: two points share an m-plane iff they agree on at least n - m axes
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    for (std::size_t j = i + 1; j < p.coords.size(); ++j) {
      const int agree = static_cast<int>((p.coords[i].array() == p.coords[j].array()).count());
      if (agree >= n - m) return false;
    }
  }
  return true;
}

}  // namespace sparsemap
