#include "sparsemap/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace sparsemap {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidSimplex: return "InvalidSimplex";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::ZeroDimensional: return "ZeroDimensional";
    case Errc::NotAGraph: return "NotAGraph";
    case Errc::AxisOutOfRange: return "AxisOutOfRange";
    case Errc::PieceNotInHyperplane: return "PieceNotInHyperplane";
    case Errc::ApexNotOnPiece: return "ApexNotOnPiece";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MEqualsN: return "MEqualsN";
    case Errc::PlacementExhausted: return "PlacementExhausted";
    case Errc::SizePreconditionViolated: return "SizePreconditionViolated";
    case Errc::LabelRangeExhausted: return "LabelRangeExhausted";
    case Errc::SparsityViolated: return "SparsityViolated";
    case Errc::RecursionBaseMissing: return "RecursionBaseMissing";
    case Errc::UnsatisfiableParameters: return "UnsatisfiableParameters";
    case Errc::RetryBudgetExhausted: return "RetryBudgetExhausted";
    case Errc::DegenerateHeights: return "DegenerateHeights";
    case Errc::ChunkTooLarge: return "ChunkTooLarge";
    case Errc::BoxTooLarge: return "BoxTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex make_complex_from_closed(std::vector<Simplex> closed, int vertex_count) {
  std::sort(closed.begin(), closed.end(), simplex_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

  SimplicialComplex Y;
  Y.vertex_count_ = vertex_count;
  Y.simplices_ = std::move(closed);
  Y.dim_ = Y.simplices_.empty() ? -1 : simplex_dim(Y.simplices_.back());
  for (std::size_t i = 0; i < Y.simplices_.size(); ++i) Y.index_.emplace(Y.simplices_[i], i);
  Y.dim_begin_.assign(static_cast<std::size_t>(Y.dim_ + 2), Y.simplices_.size());
  for (std::size_t i = Y.simplices_.size(); i-- > 0;) {
    Y.dim_begin_[static_cast<std::size_t>(simplex_dim(Y.simplices_[i]))] = i;
  }
  for (int k = Y.dim_; k-- > 0;) {
    Y.dim_begin_[k] = std::min(Y.dim_begin_[k], Y.dim_begin_[k + 1]);
  }
  return Y;
}

SimplicialComplex build_complex(std::span<const Simplex> raw, int vertex_count) {
  if (raw.empty() && vertex_count <= 0) throw Error(Errc::EmptyInput, "no simplices");

  int max_index = vertex_count - 1;
  std::set<Simplex> closed;
  for (const auto& input : raw) {
    if (input.empty()) throw Error(Errc::InvalidSimplex, "empty vertex tuple");
    Simplex s = input;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::InvalidSimplex, "repeated vertex index");
    }
    if (s.front() < 0) throw Error(Errc::VertexOutOfRange, "negative vertex index");
    if (vertex_count > 0 && s.back() >= vertex_count) {
      throw Error(Errc::VertexOutOfRange, "vertex index " + std::to_string(s.back()));
    }
    max_index = std::max(max_index, s.back());
    if (closed.contains(s)) continue;
    // every non-empty subset
    const std::size_t k = s.size();
    if (k > 20) throw Error(Errc::InvalidSimplex, "simplex dimension too large");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      closed.insert(std::move(face));
    }
  }
  const int V = max_index + 1;
  for (int v = 0; v < V; ++v) closed.insert(Simplex{v});
  return make_complex_from_closed({closed.begin(), closed.end()}, V);
}

SimplicialComplex build_complex(const std::vector<Simplex>& raw, int vertex_count) {
  return build_complex(std::span<const Simplex>(raw), vertex_count);
}

long SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::size_t> SimplicialComplex::of_dim(int k) const {
  std::vector<std::size_t> out;
  if (k < 0 || k > dim_) return out;
  out.resize(dim_begin_[k + 1] - dim_begin_[k]);
  std::iota(out.begin(), out.end(), dim_begin_[k]);
  return out;
}

std::size_t SimplicialComplex::count_of_dim(int k) const {
  if (k < 0 || k > dim_) return 0;
  return dim_begin_[k + 1] - dim_begin_[k];
}

std::vector<int> SimplicialComplex::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& s : simplices_) {
    for (int v : s) ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int SimplicialComplex::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int degree(const SimplicialComplex& Y, int v) {
  if (v < 0 || v >= Y.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  int count = 0;
  for (const auto& s : Y.simplices()) {
    if (std::binary_search(s.begin(), s.end(), v)) ++count;
  }
  return count;
}

std::vector<Simplex> boundary(const Simplex& s) {
  if (s.size() < 2) throw Error(Errc::ZeroDimensional, "boundary of a vertex");
  std::vector<Simplex> faces;
  faces.reserve(s.size());
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != drop) f.push_back(s[i]);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

Subdivision subdivide_edges(const SimplicialComplex& Y,
                            const std::map<Simplex, std::vector<double>>& cut_points) {
  if (Y.dim() != 1 && !(Y.dim() == 0 && cut_points.empty())) {
    throw Error(Errc::NotAGraph, "edge subdivision needs a 1-dimensional complex");
  }
  Subdivision out;
  std::vector<Simplex> raw;
  int next = Y.vertex_count();
  for (std::size_t idx : Y.of_dim(1)) {
    const Simplex& e = Y.simplex(idx);
    auto it = cut_points.find(e);
    if (it == cut_points.end() || it->second.empty()) {
      raw.push_back(e);
      out.parent_edge[e] = e;
      continue;
    }
    std::vector<double> cuts = it->second;
    std::sort(cuts.begin(), cuts.end());
    int prev = e[0];
    for (double t : cuts) {
      if (!(t > 0.0 && t < 1.0)) throw Error(Errc::InvalidArgument, "cut fraction outside (0,1)");
      const int fresh = next++;
      out.provenance.push_back(e);
      out.fraction.push_back(t);
      Simplex piece{prev, fresh};
      out.parent_edge[piece] = e;
      raw.push_back(std::move(piece));
      prev = fresh;
    }
    Simplex last{prev, e[1]};
    std::sort(last.begin(), last.end());
    out.parent_edge[last] = e;
    raw.push_back(std::move(last));
  }
  out.complex = build_complex(raw, next);
  return out;
}

int component_count(const SimplicialComplex& Y) {
  std::vector<int> parent(static_cast<std::size_t>(Y.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = Y.vertex_count();
  for (std::size_t idx : Y.of_dim(1)) {
    const auto& e = Y.simplex(idx);
    int a = find(e[0]), b = find(e[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace sparsemap
