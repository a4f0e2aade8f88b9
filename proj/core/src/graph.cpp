#include "specbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace specbound {

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t w = r[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  g_.n_ = n;
  g_.words_ = (n + 63) / 64;
  g_.rows_.assign(n * g_.words_, 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_)
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v) + " with n=" + std::to_string(g_.n_));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (g_.adjacent(u, v)) return *this;
  g_.rows_[u * g_.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  g_.rows_[v * g_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++g_.edge_count_;
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cone(const Graph& h) {
  const std::size_t n = h.order();
  GraphBuilder b(n + 1);
  for (const auto& [u, v] : h.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, n);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  if (sorted.back() >= g.order())
    throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(sorted.back()) +
                                " out of range");
  GraphBuilder b(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (g.order() < 2) throw std::invalid_argument("delete_vertex: graph would become empty");
  std::vector<Vertex> keep;
  keep.reserve(g.order() - 1);
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

StructuralProfile profile(const Graph& g) {
  StructuralProfile p;
  p.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  p.connected = is_connected(g);
  if (p.min_degree == p.max_degree) p.regular_degree = p.max_degree;

  if (auto colors = two_coloring(g)) {
    Bipartition bp;
    for (Vertex v = 0; v < g.order(); ++v)
      ((*colors)[v] == 0 ? bp.larger : bp.smaller).push_back(v);
    if (bp.smaller.size() > bp.larger.size()) std::swap(bp.larger, bp.smaller);
    p.bipartition = std::move(bp);
  }
  return p;
}

}  // namespace specbound
