#include "lss/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lss {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n), adjacency_(n, 0) {
  check_vertex_count(n);
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} outside [1," +
                                  std::to_string(n) + "]");
    }
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (adjacency_[a - 1] & bit(b)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    adjacency_[a - 1] |= bit(b);
    adjacency_[b - 1] |= bit(a);
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::edgeless(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph Graph::complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

Graph Graph::crown(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) e.emplace_back(i, n + j);
  return Graph(2 * n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

Graph Graph::path(int n) {
  if (n < 2) throw std::invalid_argument("paths need at least 2 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return (adjacency_[u - 1] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const { return std::popcount(adjacency_[v - 1]); }

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!has_edge(i, j)) e.emplace_back(i, j);
  return Graph(n_, e);
}

Graph Graph::edge_subgraph(std::span<const std::size_t> edge_indices) const {
  std::vector<std::pair<int, int>> e;
  e.reserve(edge_indices.size());
  for (std::size_t i : edge_indices) e.emplace_back(edges_.at(i).u, edges_.at(i).v);
  return Graph(n_, e);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (const Edge& ed : edges_) e.emplace_back(perm[ed.u - 1], perm[ed.v - 1]);
  return Graph(n_, e);
}

bool Bipartition::on_left(Vertex v) const { return std::binary_search(left.begin(), left.end(), v); }

Clutter::Clutter(int n, std::vector<HyperEdge> edges) : n_(n) {
  check_vertex_count(n);
  for (auto& e : edges) {
    if (e.empty()) throw std::invalid_argument("clutter edges must be nonempty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("clutter edge repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n) throw std::invalid_argument("clutter edge vertex outside [1,n]");
  }
  std::sort(edges.begin(), edges.end());
  masks_.reserve(edges.size());
  for (const auto& e : edges) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= bit(v);
    masks_.push_back(m);
  }
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    for (std::size_t j = 0; j < masks_.size(); ++j) {
      if (i != j && (masks_[i] & masks_[j]) == masks_[i]) {
        throw std::invalid_argument(masks_[i] == masks_[j] ? "duplicate clutter edge"
                                                           : "edge family is not an antichain");
      }
    }
  }
  edges_ = std::move(edges);
}

Clutter::Clutter(const Graph& g) : n_(g.vertex_count()) {
  for (const Edge& e : g.edges()) {
    edges_.push_back({e.u, e.v});
    masks_.push_back(bit(e.u) | bit(e.v));
  }
}

std::optional<std::size_t> Clutter::index_of(const HyperEdge& e) const {
  HyperEdge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted);
  if (it == edges_.end() || *it != sorted) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Clutter::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const HyperEdge& e) { return e.size() == 2; });
}

Graph Clutter::as_graph() const {
  if (!is_graph()) throw std::invalid_argument("clutter has an edge that is not a pair");
  std::vector<std::pair<int, int>> e;
  for (const auto& ed : edges_) e.emplace_back(ed[0], ed[1]);
  return Graph(n_, e);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t candidates, int size) {
    if (size > best) best = size;
    while (candidates) {
      if (size + std::popcount(candidates) <= best) return;
      const int idx = std::countr_zero(candidates);
      candidates &= candidates - 1;
      grow(candidates & g.neighbor_mask(idx + 1), size + 1);
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  grow(all, 0);
  return best;
}

bool is_forest(const Graph& g) {
  std::vector<int> parent(g.vertex_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_matching(const Graph& g) { return max_degree(g) <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n + 1, -1);
  for (Vertex s = 1; s <= n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w = 1; w <= n; ++w) {
        if (!g.has_edge(v, w)) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 1; v <= n; ++v) (color[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

// A block that is not a bridge is either a cycle (|E| = |V|) or contains a
// theta subgraph; two of the theta's three paths have equal parity and close
// an even cycle.
bool has_even_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<Edge> stack;
  int timer = 0;
  bool found = false;

  auto close_block = [&](const Edge& until) {
    std::uint64_t verts = 0;
    std::size_t count = 0;
    while (!stack.empty()) {
      const Edge e = stack.back();
      stack.pop_back();
      verts |= bit(e.u) | bit(e.v);
      ++count;
      if (e == until) break;
    }
    const auto nv = static_cast<std::size_t>(std::popcount(verts));
    if (count >= 2 && (count > nv || nv % 2 == 0)) found = true;
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = ++timer;
    for (Vertex w = 1; w <= n && !found; ++w) {
      if (!g.has_edge(v, w) || w == parent) continue;
      const Edge e{std::min(v, w), std::max(v, w)};
      if (disc[w] == 0) {
        stack.push_back(e);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) close_block(e);
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 1; v <= n && !found; ++v) {
    if (disc[v] == 0) dfs(v, 0);
  }
  return found;
}

bool contains_complete_bipartite(const Graph& g, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} needs a, b >= 1");
  if (a > b) std::swap(a, b);
  const int n = g.vertex_count();
  if (a + b > n) return false;
  // Choose the smaller side L; K_{a,b} exists iff some a-set has >= b common neighbours.
  std::function<bool(Vertex, int, std::uint64_t)> pick = [&](Vertex from, int chosen, std::uint64_t common) {
    if (std::popcount(common) < b) return false;
    if (chosen == a) return true;
    for (Vertex v = from; v <= n - (a - chosen) + 1; ++v) {
      if (g.degree(v) < b) continue;
      if (pick(v + 1, chosen + 1, common & g.neighbor_mask(v))) return true;
    }
    return false;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return pick(1, 0, all);
}

bool contains_crown(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("B_d needs d >= 1");
  const int n = g.vertex_count();
  if (2 * d > n) return false;
  std::uint64_t eligible = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) >= d - 1) eligible |= bit(v);
  std::vector<Vertex> us, vs;
  std::uint64_t used = 0;
  // Pairs (u_k, v_k) are placed in order with u_1 < u_2 < ...; u_k must see all
  // earlier v_j and v_k all earlier u_j.
  std::function<bool()> place = [&]() -> bool {
    const int k = static_cast<int>(us.size());
    if (k == d) return true;
    if (std::popcount(eligible & ~used) < 2 * (d - k)) return false;
    const Vertex u_min = us.empty() ? 1 : us.back() + 1;
    for (Vertex u = u_min; u <= n; ++u) {
      if ((used & bit(u)) || g.degree(u) < d - 1) continue;
      bool ok = true;
      for (Vertex v : vs) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      for (Vertex v = 1; v <= n; ++v) {
        if (v == u || (used & bit(v)) || g.degree(v) < d - 1) continue;
        bool ok_v = true;
        for (Vertex w : us) ok_v = ok_v && g.has_edge(v, w);
        if (!ok_v) continue;
        us.push_back(u);
        vs.push_back(v);
        used |= bit(u) | bit(v);
        if (place()) return true;
        used &= ~(bit(u) | bit(v));
        us.pop_back();
        vs.pop_back();
      }
    }
    return false;
  };
  return place();
}

namespace {

bool connected_without(const Graph& g, std::uint64_t removed) {
  const int n = g.vertex_count();
  std::uint64_t remaining = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (!(removed & bit(v))) remaining |= bit(v);
  if (remaining == 0) return true;
  std::uint64_t seen = remaining & (~remaining + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    const int idx = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t next = g.neighbor_mask(idx + 1) & remaining & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen == remaining;
}

}  // namespace

bool connectivity_at_least(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("connectivity order must be nonnegative");
  if (n <= k) throw std::invalid_argument("k-connectivity requires n >= k+1");
  if (k == 0) return true;
  const int r = k - 1;
  std::vector<Vertex> chosen;
  std::function<bool(Vertex, std::uint64_t)> all_connected = [&](Vertex from, std::uint64_t removed) {
    if (static_cast<int>(chosen.size()) == r) return connected_without(g, removed);
    for (Vertex v = from; v <= n; ++v) {
      chosen.push_back(v);
      const bool ok = all_connected(v + 1, removed | bit(v));
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return all_connected(1, 0);
}

std::optional<Bipartition> complete_bipartite_sides(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  auto parts = bipartition(g);
  if (!parts) return std::nullopt;
  Bipartition sides;
  for (Vertex v : parts->left)
    if (g.degree(v) > 0) sides.left.push_back(v);
  for (Vertex v : parts->right)
    if (g.degree(v) > 0) sides.right.push_back(v);
  if (g.edge_count() != sides.left.size() * sides.right.size()) return std::nullopt;
  if (sides.left.size() > sides.right.size() ||
      (sides.left.size() == sides.right.size() && sides.left.front() > sides.right.front())) {
    std::swap(sides.left, sides.right);
  }
  return sides;
}

std::optional<std::vector<Vertex>> complete_graph_vertices(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  std::vector<Vertex> verts;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) > 0) verts.push_back(v);
  const std::size_t k = verts.size();
  if (g.edge_count() != k * (k - 1) / 2) return std::nullopt;
  return verts;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : ", ") << e.u << "-" << e.v;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace lss
