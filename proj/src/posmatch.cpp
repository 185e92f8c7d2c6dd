#include "lss/posmatch.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "lss/linear_feasibility.hpp"

namespace lss {

namespace {

std::uint64_t vbit(Vertex v) { return std::uint64_t{1} << (v - 1); }

void check_indices(const Clutter& h, std::span<const std::size_t> edges, const char* what) {
  for (std::size_t e : edges) {
    if (e >= h.edge_count()) throw std::invalid_argument(std::string(what) + " edge index out of range");
  }
}

// Membership flags for `ambient`; throws when `matching` leaves it.
std::vector<char> ambient_flags(const Clutter& h, std::span<const std::size_t> matching,
                                std::span<const std::size_t> ambient) {
  check_indices(h, matching, "matching");
  check_indices(h, ambient, "ambient");
  std::vector<char> in(h.edge_count(), 0);
  for (std::size_t e : ambient) in[e] = 1;
  for (std::size_t e : matching) {
    if (!in[e]) throw std::invalid_argument("matching edge is not among the ambient edges");
  }
  return in;
}

// Vertex mask covered by the edges, or nullopt when two of them meet.
std::optional<std::uint64_t> disjoint_cover(const Clutter& h, std::span<const std::size_t> edges) {
  std::uint64_t covered = 0;
  for (std::size_t e : edges) {
    if (covered & h.edge_mask(e)) return std::nullopt;
    covered |= h.edge_mask(e);
  }
  return covered;
}

std::vector<std::size_t> all_edges(const Clutter& h) {
  std::vector<std::size_t> out(h.edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Rational abs_sum(const std::vector<Rational>& w, std::uint64_t mask) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mask >> i & 1) s += abs(w[i]);
  }
  return s;
}

// Vertices outside `covered` get -(1 + sum |w| over covered).
void push_down_uncovered(std::vector<Rational>& w, std::uint64_t covered) {
  const Rational low = -(abs_sum(w, covered) + 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(covered >> i & 1)) w[i] = low;
  }
}

PositivityResult solve_positivity(const Clutter& h, std::span<const std::size_t> matching,
                                  std::span<const std::size_t> ambient, bool restrict) {
  const auto in_ambient = ambient_flags(h, matching, ambient);
  const auto cover = disjoint_cover(h, matching);
  if (!cover) return {std::nullopt, "not a matching"};
  const int n = h.vertex_count();
  const std::uint64_t covered = *cover;
  const std::uint64_t scope = restrict ? covered : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);

  std::vector<int> column(n, -1);
  int vars = 0;
  for (int i = 0; i < n; ++i) {
    if (scope >> i & 1) column[i] = vars++;
  }
  std::vector<char> in_matching(h.edge_count(), 0);
  for (std::size_t e : matching) in_matching[e] = 1;

  LinearSystem system;
  system.variables = vars;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (!in_ambient[e] || (h.edge_mask(e) & ~scope)) continue;
    std::vector<Rational> coeffs(vars, 0);
    for (Vertex v : h.edge(e)) coeffs[column[v - 1]] = 1;
    if (in_matching[e]) {
      system.add(std::move(coeffs), Sense::AtLeast, 1);
    } else {
      system.add(std::move(coeffs), Sense::AtMost, -1);
    }
  }
  const auto point = find_feasible_point(system);
  if (!point) return {std::nullopt, "the weight inequalities are infeasible"};

  WeightCertificate w;
  w.weights.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (column[i] >= 0) w.weights[i] = (*point)[column[i]];
  }
  if (restrict) push_down_uncovered(w.weights, covered);
  if (!certifies(h, w, matching, ambient)) throw std::logic_error("positive matching certificate failed to verify");
  return {std::move(w), {}};
}

}  // namespace

bool certifies(const Clutter& h, const WeightCertificate& w, std::span<const std::size_t> matching,
               std::span<const std::size_t> ambient) {
  if (static_cast<int>(w.weights.size()) != h.vertex_count()) return false;
  std::vector<char> in_matching(h.edge_count(), 0);
  for (std::size_t e : matching) {
    if (e >= h.edge_count()) return false;
    in_matching[e] = 1;
  }
  std::vector<char> in_ambient(h.edge_count(), 0);
  for (std::size_t e : ambient) {
    if (e >= h.edge_count()) return false;
    in_ambient[e] = 1;
  }
  for (std::size_t e : matching) {
    if (!in_ambient[e]) return false;
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (!in_ambient[e]) continue;
    Rational s = 0;
    for (Vertex v : h.edge(e)) s += w(v);
    if (in_matching[e] ? s <= 0 : s >= 0) return false;
  }
  return true;
}

PositivityResult is_positive_matching(const Clutter& h, std::span<const std::size_t> matching,
                                      std::span<const std::size_t> ambient) {
  return solve_positivity(h, matching, ambient, true);
}

PositivityResult is_positive_matching(const Clutter& h, std::span<const std::size_t> matching) {
  const auto all = all_edges(h);
  return solve_positivity(h, matching, all, true);
}

PositivityResult is_positive_matching_full(const Clutter& h, std::span<const std::size_t> matching,
                                           std::span<const std::size_t> ambient) {
  return solve_positivity(h, matching, ambient, false);
}

bool is_positive_matching_bipartite(const Graph& g, const Bipartition& b, std::span<const std::size_t> matching) {
  const int n = g.vertex_count();
  std::vector<int> side(n + 1, -1);
  for (Vertex v : b.left) side[v] = 0;
  for (Vertex v : b.right) {
    if (side[v] != -1) throw std::invalid_argument("bipartition sides overlap");
    side[v] = 1;
  }
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    if (side[e.u] == -1 || side[e.v] == -1 || side[e.u] == side[e.v]) {
      throw std::invalid_argument("not a bipartition of the graph");
    }
  }
  std::vector<char> in_matching(edges.size(), 0);
  std::uint64_t covered = 0;
  for (std::size_t k : matching) {
    if (k >= edges.size()) throw std::invalid_argument("matching edge index out of range");
    const std::uint64_t m = vbit(edges[k].u) | vbit(edges[k].v);
    if (covered & m) throw std::invalid_argument("not a matching");
    covered |= m;
    in_matching[k] = 1;
  }
  std::vector<std::vector<Vertex>> out(n + 1);
  std::vector<int> indegree(n + 1, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Vertex l = edges[k].u, r = edges[k].v;
    if (side[l] == 1) std::swap(l, r);
    if (!in_matching[k]) std::swap(l, r);
    out[l].push_back(r);
    ++indegree[r];
  }
  std::queue<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.front();
    ready.pop();
    ++seen;
    for (Vertex w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return seen == n;
}

DecompositionCheck verify_pm_decomposition(const Clutter& h, const PmDecomposition& d) {
  if (d.parts.size() != d.certificates.size()) {
    return {false, "expected one certificate per part"};
  }
  std::vector<int> owner(h.edge_count(), -1);
  for (std::size_t l = 0; l < d.parts.size(); ++l) {
    for (std::size_t e : d.parts[l]) {
      if (e >= h.edge_count()) return {false, "part " + std::to_string(l + 1) + " has an edge index out of range"};
      if (owner[e] != -1) return {false, "edge " + std::to_string(e) + " lies in two parts"};
      owner[e] = static_cast<int>(l);
    }
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (owner[e] == -1) return {false, "edge " + std::to_string(e) + " is not covered"};
  }
  std::vector<std::size_t> residual = all_edges(h);
  for (std::size_t l = 0; l < d.parts.size(); ++l) {
    if (!disjoint_cover(h, d.parts[l])) return {false, "part " + std::to_string(l + 1) + " is not a matching"};
    if (!certifies(h, d.certificates[l], d.parts[l], residual)) {
      return {false, "certificate " + std::to_string(l + 1) + " fails on its residual edges"};
    }
    std::erase_if(residual, [&](std::size_t e) { return owner[e] == static_cast<int>(l); });
  }
  return {true, {}};
}

std::pair<int, int> pmd_bounds(const Graph& g) {
  const int m = static_cast<int>(g.edge_count());
  if (m == 0) return {0, 0};
  const int delta = max_degree(g);
  if (is_forest(g)) return {delta, delta};
  int active = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) active += g.degree(v) > 0;
  const int upper = bipartition(g) ? active - 1 : 2 * active - 3;
  return {delta, std::min(upper, m)};
}

std::optional<WeightCertificate> greedy_certificate(const Clutter& h, std::span<const std::size_t> part,
                                                    std::span<const std::size_t> residual) {
  ambient_flags(h, part, residual);
  if (!disjoint_cover(h, part)) return std::nullopt;
  std::vector<std::size_t> order(part.begin(), part.end());
  auto span_of = [&](std::size_t e) { return h.edge(e).back() - h.edge(e).front(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return span_of(a) != span_of(b) ? span_of(a) < span_of(b) : h.edge(a) < h.edge(b);
  });

  std::vector<Rational> w(h.vertex_count(), 0);
  std::uint64_t covered = 0;
  bool stuck = false;
  for (std::size_t a : order) {
    const std::uint64_t next = covered | h.edge_mask(a);
    std::optional<Vertex> pivot;
    for (Vertex v : h.edge(a)) {
      bool alone = true;
      for (std::size_t e : residual) {
        if (e != a && (h.edge_mask(e) & ~next) == 0 && (h.edge_mask(e) & vbit(v))) {
          alone = false;
          break;
        }
      }
      if (alone) {
        pivot = v;
        break;
      }
    }
    if (!pivot) {
      stuck = true;
      break;
    }
    const Rational low = -(abs_sum(w, covered) + 1);
    Rational others = 0;
    for (Vertex v : h.edge(a)) {
      if (v == *pivot) continue;
      w[v - 1] = low;
      others += low;
    }
    w[*pivot - 1] = 1 - others;
    covered = next;
  }
  if (!stuck) {
    push_down_uncovered(w, covered);
    WeightCertificate cert{std::move(w)};
    if (certifies(h, cert, part, residual)) return cert;
  }
  return is_positive_matching(h, part, residual).certificate;
}

std::vector<EdgeSet> complete_graph_slices(const Clutter& h, std::span<const Vertex> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<EdgeSet> parts;
  for (int l = 1; l <= 2 * k - 3; ++l) {
    EdgeSet part;
    for (int p = 1; p <= k; ++p) {
      const int q = l + 2 - p;
      if (q <= p || q > k) continue;
      const auto idx = h.index_of({vertices[p - 1], vertices[q - 1]});
      if (!idx) throw std::invalid_argument("clutter is missing an edge of the complete graph");
      part.push_back(*idx);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<EdgeSet> complete_bipartite_slices(const Clutter& h, const Bipartition& sides) {
  const int m = static_cast<int>(sides.left.size());
  const int n = static_cast<int>(sides.right.size());
  std::vector<EdgeSet> parts;
  for (int l = 1; l <= m + n - 1; ++l) {
    EdgeSet part;
    for (int i = 1; i <= m; ++i) {
      const int j = l + 1 - i;
      if (j < 1 || j > n) continue;
      Clutter::HyperEdge e{sides.left[i - 1], sides.right[j - 1]};
      std::sort(e.begin(), e.end());
      const auto idx = h.index_of(e);
      if (!idx) throw std::invalid_argument("clutter is missing an edge of the complete bipartite graph");
      part.push_back(*idx);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::optional<PmDecomposition> certify_parts(const Clutter& h, std::vector<EdgeSet> parts) {
  std::vector<char> used(h.edge_count(), 0);
  PmDecomposition d;
  std::vector<std::size_t> residual = all_edges(h);
  for (auto& part : parts) {
    if (part.empty()) continue;
    auto cert = greedy_certificate(h, part, residual);
    if (!cert) return std::nullopt;
    for (std::size_t e : part) used[e] = 1;
    std::erase_if(residual, [&](std::size_t e) { return used[e] != 0; });
    d.parts.push_back(std::move(part));
    d.certificates.push_back(std::move(*cert));
  }
  return d;
}

namespace {

// Proper edge colouring of a forest with max-degree colours, by BFS from each root.
std::vector<EdgeSet> forest_colouring(const Clutter& h) {
  const int n = h.vertex_count();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n + 1);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    adj[h.edge(e)[0]].push_back({h.edge(e)[1], e});
    adj[h.edge(e)[1]].push_back({h.edge(e)[0], e});
  }
  std::vector<int> colour(h.edge_count(), -1);
  std::vector<char> seen(n + 1, 0);
  std::vector<int> parent_colour(n + 1, -1);
  int colours = 0;
  for (Vertex root = 1; root <= n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      int c = 0;
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        if (c == parent_colour[v]) ++c;
        colour[e] = c;
        parent_colour[w] = c;
        colours = std::max(colours, c + 1);
        ++c;
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<EdgeSet> parts(colours);
  for (std::size_t e = 0; e < h.edge_count(); ++e) parts[colour[e]].push_back(e);
  return parts;
}

PmDecomposition grow_greedily(const Clutter& h) {
  PmDecomposition d;
  std::vector<std::size_t> residual = all_edges(h);
  while (!residual.empty()) {
    EdgeSet part;
    WeightCertificate cert;
    std::uint64_t covered = 0;
    for (std::size_t e : residual) {
      if (covered & h.edge_mask(e)) continue;
      part.push_back(e);
      auto result = is_positive_matching(h, part, residual);
      if (result) {
        covered |= h.edge_mask(e);
        cert = std::move(*result.certificate);
      } else {
        part.pop_back();
      }
    }
    std::erase_if(residual, [&](std::size_t e) { return std::binary_search(part.begin(), part.end(), e); });
    d.parts.push_back(std::move(part));
    d.certificates.push_back(std::move(cert));
  }
  return d;
}

}  // namespace

PmDecomposition greedy_pm_decomposition(const Clutter& h) {
  if (h.edge_count() == 0) return {};
  if (h.is_graph()) {
    const Graph g = h.as_graph();
    std::optional<std::vector<EdgeSet>> parts;
    if (auto vs = complete_graph_vertices(g)) {
      parts = complete_graph_slices(h, *vs);
    } else if (auto sides = complete_bipartite_sides(g)) {
      parts = complete_bipartite_slices(h, *sides);
    } else if (is_forest(g)) {
      parts = forest_colouring(h);
    }
    if (parts) {
      if (auto d = certify_parts(h, std::move(*parts))) return std::move(*d);
    }
  }
  return grow_greedily(h);
}

namespace {

struct BudgetSpent {};

class PeelingSearch {
 public:
  PeelingSearch(const Clutter& h, std::size_t budget) : h_(h), budget_(budget) {
    for (std::size_t e = 0; e < h.edge_count(); ++e) masks_.push_back(h.edge_mask(e));
  }

  // Decomposes `residual` into at most p parts, appending them to `out`.
  bool solve(std::uint64_t residual, int p, std::vector<std::uint64_t>& out) {
    if (residual == 0) return true;
    if (p == 0) return false;
    tick();
    if (auto it = failed_.find(residual); it != failed_.end() && it->second >= p) return false;
    if (max_degree_of(residual) > p) {
      remember_failure(residual, p);
      return false;
    }
    for (std::uint64_t m : maximal_matchings(residual)) {
      out.push_back(m);
      if (solve(residual & ~m, p - 1, out)) return true;
      out.pop_back();
    }
    remember_failure(residual, p);
    return false;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  void tick() {
    if (++nodes_ > budget_) throw BudgetSpent{};
  }

  void remember_failure(std::uint64_t residual, int p) {
    int& f = failed_[residual];
    f = std::max(f, p);
  }

  int max_degree_of(std::uint64_t residual) const {
    std::vector<int> deg(h_.vertex_count(), 0);
    int best = 0;
    for (std::uint64_t r = residual; r; r &= r - 1) {
      for (Vertex v : h_.edge(std::countr_zero(r))) best = std::max(best, ++deg[v - 1]);
    }
    return best;
  }

  static EdgeSet indices(std::uint64_t mask) {
    EdgeSet out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
  }

  bool positive(std::uint64_t residual, std::uint64_t matching) {
    const auto key = std::make_pair(residual, matching);
    if (auto it = lp_cache_.find(key); it != lp_cache_.end()) return it->second;
    tick();
    const auto m = indices(matching);
    const auto r = indices(residual);
    const bool ok = static_cast<bool>(is_positive_matching(h_, m, r));
    lp_cache_.emplace(key, ok);
    return ok;
  }

  std::vector<std::uint64_t> maximal_matchings(std::uint64_t residual) {
    if (auto it = maximal_cache_.find(residual); it != maximal_cache_.end()) return it->second;
    const EdgeSet edges = indices(residual);
    std::vector<std::uint64_t> found;
    enumerate(residual, edges, 0, 0, 0, found);
    std::stable_sort(found.begin(), found.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    maximal_cache_.emplace(residual, found);
    return found;
  }

  void enumerate(std::uint64_t residual, const EdgeSet& edges, std::size_t i, std::uint64_t matching,
                 std::uint64_t covered, std::vector<std::uint64_t>& found) {
    if (i == edges.size()) {
      for (std::size_t e : edges) {
        const std::uint64_t b = std::uint64_t{1} << e;
        if (!(matching & b) && !(covered & masks_[e]) && positive(residual, matching | b)) return;
      }
      found.push_back(matching);
      return;
    }
    const std::size_t e = edges[i];
    const std::uint64_t b = std::uint64_t{1} << e;
    if (!(covered & masks_[e]) && positive(residual, matching | b)) {
      enumerate(residual, edges, i + 1, matching | b, covered | masks_[e], found);
    }
    enumerate(residual, edges, i + 1, matching, covered, found);
  }

  const Clutter& h_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, int> failed_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> maximal_cache_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, KeyHash> lp_cache_;
};

int maximum_matching_size(const Clutter& h, std::size_t from, std::uint64_t covered) {
  int best = 0;
  for (std::size_t e = from; e < h.edge_count(); ++e) {
    if (covered & h.edge_mask(e)) continue;
    best = std::max(best, 1 + maximum_matching_size(h, e + 1, covered | h.edge_mask(e)));
  }
  return best;
}

}  // namespace

PmdResult exact_pmd(const Clutter& h, std::size_t node_budget) {
  PmdResult result;
  const std::size_t m = h.edge_count();
  if (m == 0) {
    result.decomposition = PmDecomposition{};
    result.exact = true;
    return result;
  }
  PmDecomposition greedy = greedy_pm_decomposition(h);
  result.upper = static_cast<int>(greedy.size());
  result.decomposition = std::move(greedy);

  std::vector<int> deg(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e) result.lower = std::max(result.lower, ++deg[v - 1]);
  }
  if (m <= 64) {
    const int nu = maximum_matching_size(h, 0, 0);
    result.lower = std::max(result.lower, static_cast<int>((m + nu - 1) / nu));
  }
  if (h.is_graph()) {
    const auto [lo, up] = pmd_bounds(h.as_graph());
    result.lower = std::max(result.lower, lo);
    (void)up;
  }
  if (result.lower >= result.upper) {
    result.lower = result.upper;
    result.exact = true;
    return result;
  }
  if (m > 64) return result;

  PeelingSearch search(h, node_budget);
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  try {
    while (result.lower < result.upper) {
      std::vector<std::uint64_t> masks;
      if (search.solve(all, result.lower, masks)) {
        std::vector<EdgeSet> parts;
        for (std::uint64_t mask : masks) {
          EdgeSet part;
          for (; mask; mask &= mask - 1) part.push_back(std::countr_zero(mask));
          parts.push_back(std::move(part));
        }
        auto d = certify_parts(h, std::move(parts));
        if (!d) throw std::logic_error("search produced a part without a certificate");
        result.upper = static_cast<int>(d->size());
        result.decomposition = std::move(*d);
        break;
      }
      ++result.lower;
    }
  } catch (const BudgetSpent&) {
    return result;
  }
  result.lower = result.upper;
  result.exact = true;
  return result;
}

}  // namespace lss
