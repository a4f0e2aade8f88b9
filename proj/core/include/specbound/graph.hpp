#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace specbound {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
/// bit matrix. Instances are immutable once built; use GraphBuilder to make
/// new ones.
class Graph {
 public:
  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::size_t degree(Vertex v) const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Bit row of vertex v; bit w of word w/64 is set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Neighborhood as a single word. Only valid when order() <= 64.
  std::uint64_t row_mask(Vertex v) const noexcept { return rows_[v * words_]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Mutable staging area for a Graph. Duplicate edges collapse.
class GraphBuilder {
 public:
  /// Throws std::invalid_argument when n == 0.
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return g_.n_; }

  /// Throws std::invalid_argument for self-loops or out-of-range endpoints.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }

  Graph build() &&;
  Graph build() const&;

 private:
  Graph g_;
};

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

/// Adds a vertex with index order(h) joined to every vertex of h.
Graph cone(const Graph& h);

/// Subgraph induced on `keep`, relabeled 0..k-1 in increasing vertex order.
/// Throws std::invalid_argument for an empty set or out-of-range vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Removes one vertex, relabeling the rest in order.
Graph delete_vertex(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<Vertex> larger;   // |larger| >= |smaller|
  std::vector<Vertex> smaller;
};

struct StructuralProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool connected = false;
  std::optional<std::size_t> regular_degree;
  std::optional<Bipartition> bipartition;
};

StructuralProfile profile(const Graph& g);

/// Two-colouring of every component (colour 0 for the smallest vertex of
/// each component), or nullopt if g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace specbound
