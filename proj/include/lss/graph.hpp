#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lss {

/// Vertices are 1-based: a graph on n vertices uses labels 1..n.
using Vertex = int;

/// Adjacency rows are 64-bit masks, so every graph is limited to this many vertices.
inline constexpr int kMaxVertices = 64;

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on [n]. Edges are stored sorted lexicographically;
/// isolated vertices are legal and preserved.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, duplicates, or out-of-range endpoints.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  static Graph edgeless(int n);
  static Graph complete(int n);
  /// K_{m,n} with left side 1..m and right side m+1..m+n.
  static Graph complete_bipartite(int m, int n);
  /// B_n: K_{n,n} minus the perfect matching {i, n+i}.
  static Graph crown(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  /// Bit (w-1) is set iff w is adjacent to v.
  std::uint64_t neighbor_mask(Vertex v) const { return adjacency_[v - 1]; }

  Graph complement() const;
  /// Graph on the same vertex set keeping only the listed edges (indices into edges()).
  Graph edge_subgraph(std::span<const std::size_t> edge_indices) const;
  /// Relabels so that vertex v becomes perm[v-1]; perm is a permutation of 1..n.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Vertex sides of a bipartite graph; both sides sorted ascending.
struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  bool on_left(Vertex v) const;
};

/// Hypergraph whose edges form an antichain. Each edge is a sorted, nonempty
/// vertex list; the edge family is kept in canonical (lexicographic) order.
class Clutter {
 public:
  using HyperEdge = std::vector<Vertex>;

  Clutter() = default;
  /// Throws std::invalid_argument on empty or out-of-range edges, duplicate
  /// edges, or when one edge contains another.
  Clutter(int n, std::vector<HyperEdge> edges);
  explicit Clutter(const Graph& g);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  const HyperEdge& edge(std::size_t i) const { return edges_[i]; }
  std::uint64_t edge_mask(std::size_t i) const { return masks_[i]; }
  std::optional<std::size_t> index_of(const HyperEdge& e) const;

  /// True when every edge has exactly two vertices.
  bool is_graph() const;
  Graph as_graph() const;

 private:
  int n_ = 0;
  std::vector<HyperEdge> edges_;
  std::vector<std::uint64_t> masks_;
};

int max_degree(const Graph& g);
int clique_number(const Graph& g);
bool is_forest(const Graph& g);
bool is_matching(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
bool has_even_cycle(const Graph& g);
bool contains_complete_bipartite(const Graph& g, int a, int b);
bool contains_crown(const Graph& g, int d);
/// Throws std::invalid_argument when n <= k.
bool connectivity_at_least(const Graph& g, int k);

/// When the non-isolated part of g is exactly K_{m,n}, returns its two sides
/// (smaller side first).
std::optional<Bipartition> complete_bipartite_sides(const Graph& g);
/// When the non-isolated part of g is a complete graph, returns its vertices.
std::optional<std::vector<Vertex>> complete_graph_vertices(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace lss
