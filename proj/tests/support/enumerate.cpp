#include "enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace lss::testing {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs all_pairs(int n) {
  Pairs p;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  }
  return p;
}

Graph from_code(int n, const Pairs& pairs, std::uint32_t code) {
  Pairs edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (code >> k & 1U) edges.push_back(pairs[k]);
  }
  return Graph(n, edges);
}

/// AHU encoding of the tree rooted at r.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[r]) {
    if (c != parent) kids.push_back(rooted_code(adj, c, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int v : leaves) {
      for (int w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    leaves = next;
  }
  std::string best;
  for (int c : leaves) {
    std::string s = rooted_code(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("all_graphs supports 1 <= n <= 6");
  const Pairs pairs = all_pairs(n);
  const std::uint32_t total = 1U << pairs.size();
  // index[i][j] = bit of the pair {i, j}
  std::vector<std::vector<int>> index(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
    index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<char> seen(total, 0);
  std::vector<Graph> out;
  for (std::uint32_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    for (const auto& q : perms) {
      std::uint32_t image = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (code >> k & 1U) image |= 1U << index[q[pairs[k].first - 1]][q[pairs[k].second - 1]];
      }
      seen[image] = 1;
    }
    out.push_back(from_code(n, pairs, code));
  }
  return out;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = all_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("trees need at least one vertex");
  if (n == 1) return {Graph::edgeless(1)};
  if (n == 2) return {Graph(2, {{1, 2}})};
  std::set<std::string> codes;
  std::vector<Graph> out;
  std::vector<int> seq(n - 2, 1);
  while (true) {
    // Pruefer decoding.
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) ++degree[x];
    Pairs edges;
    for (int x : seq) {
      for (int leaf = 1; leaf <= n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u - 1].push_back(v - 1);
      adj[v - 1].push_back(u - 1);
    }
    if (codes.insert(tree_code(adj)).second) out.emplace_back(n, edges);

    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_matchings(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  const auto edges = g.edges();
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t used) {
    out.push_back(current);
    for (std::size_t e = from; e < edges.size(); ++e) {
      const std::uint64_t m = (1ULL << (edges[e].u - 1)) | (1ULL << (edges[e].v - 1));
      if (used & m) continue;
      current.push_back(e);
      rec(e + 1, used | m);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Graph> edge_deleted_subgraphs(const Graph& g) {
  std::vector<Graph> out;
  const std::size_t m = g.edge_count();
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1ULL) keep.push_back(e);
    }
    out.push_back(g.edge_subgraph(keep));
  }
  return out;
}

bool brute_even_cycle(const Graph& g) {
  const int n = g.vertex_count();
  // Simple cycles through their smallest vertex s, found by DFS.
  for (int s = 1; s <= n; ++s) {
    std::vector<char> on_path(n + 1, 0);
    bool found = false;
    std::function<void(int, int)> dfs = [&](int v, int len) {
      if (found) return;
      for (int w = s; w <= n; ++w) {
        if (!g.has_edge(v, w)) continue;
        if (w == s && len >= 3 && len % 2 == 0) {
          found = true;
          return;
        }
        if (w > s && !on_path[w]) {
          on_path[w] = 1;
          dfs(w, len + 1);
          on_path[w] = 0;
        }
      }
    };
    on_path[s] = 1;
    dfs(s, 1);
    if (found) return true;
  }
  return false;
}

}  // namespace lss::testing
