#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lss/graph.hpp"
#include "lss/rational.hpp"

namespace lss {

/// Vertex weights w(1..n), stored at index v-1.
struct WeightCertificate {
  std::vector<Rational> weights;

  const Rational& operator()(Vertex v) const { return weights[v - 1]; }
};

/// Indices into Clutter::edges().
using EdgeSet = std::vector<std::size_t>;

/// Ordered partition E_1, ..., E_p of the edge set. certificates[l] proves
/// that parts[l] is a positive matching on the edges not in earlier parts.
struct PmDecomposition {
  std::vector<EdgeSet> parts;
  std::vector<WeightCertificate> certificates;

  std::size_t size() const { return parts.size(); }
};

struct PmdResult {
  int lower = 0;
  int upper = 0;
  std::optional<PmDecomposition> decomposition;
  bool exact = false;
};

struct PositivityResult {
  std::optional<WeightCertificate> certificate;
  /// Empty when a certificate was found.
  std::string reason;

  explicit operator bool() const { return certificate.has_value(); }
};

/// Decides whether `matching` is a positive matching of the sub-clutter
/// formed by the `ambient` edges (which must contain the matching). The strict
/// system is normalised to >= 1 / <= -1 and solved exactly. Only vertices
/// covered by the matching enter the linear system; all other vertices get a
/// weight negative enough to push every remaining edge below zero.
/// Throws std::invalid_argument on out-of-range indices or a matching edge
/// missing from the ambient set.
PositivityResult is_positive_matching(const Clutter& h, std::span<const std::size_t> matching,
                                      std::span<const std::size_t> ambient);
/// Same with every edge of h as the ambient set.
PositivityResult is_positive_matching(const Clutter& h, std::span<const std::size_t> matching);

/// Reference version that keeps one variable per vertex of h.
PositivityResult is_positive_matching_full(const Clutter& h, std::span<const std::size_t> matching,
                                           std::span<const std::size_t> ambient);

/// Acyclic-orientation test: matching edges point left to right, all other
/// edges right to left. Throws std::invalid_argument when `matching` is not a
/// matching or b is not a bipartition of g. Indices refer to g.edges().
bool is_positive_matching_bipartite(const Graph& g, const Bipartition& b, std::span<const std::size_t> matching);

/// True when w satisfies the strict inequalities for `matching` inside `ambient`.
bool certifies(const Clutter& h, const WeightCertificate& w, std::span<const std::size_t> matching,
               std::span<const std::size_t> ambient);

struct DecompositionCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

DecompositionCheck verify_pm_decomposition(const Clutter& h, const PmDecomposition& d);

/// Lower bound max degree; upper bound min(2n-3, |E|), or min(n-1, |E|) for
/// bipartite graphs (n-1 being the sum of the two side sizes minus one);
/// both equal the maximum degree for forests.
std::pair<int, int> pmd_bounds(const Graph& g);

/// Weights for `part` on the `residual` edges, built one edge at a time:
/// each new edge gets a pivot vertex lying in no other residual edge among the
/// covered vertices, and that pivot is raised until the edge turns positive.
/// Falls back to the linear solver when no pivot exists.
std::optional<WeightCertificate> greedy_certificate(const Clutter& h, std::span<const std::size_t> part,
                                                    std::span<const std::size_t> residual);

/// Slices of K_n on the given vertex list: part l holds the pairs whose
/// positions sum to l+2.
std::vector<EdgeSet> complete_graph_slices(const Clutter& h, std::span<const Vertex> vertices);
/// Slices of K_{m,n}: part l holds the pairs whose positions sum to l+1.
std::vector<EdgeSet> complete_bipartite_slices(const Clutter& h, const Bipartition& sides);

/// Attaches certificates to an ordered partition. Returns nullopt when some
/// part is not a positive matching on its residual.
std::optional<PmDecomposition> certify_parts(const Clutter& h, std::vector<EdgeSet> parts);

/// A valid decomposition: the explicit slicings for complete and complete
/// bipartite graphs, a proper edge colouring with max-degree colours for
/// forests, and otherwise repeated greedy growth of positive matchings in
/// lexicographic edge order.
PmDecomposition greedy_pm_decomposition(const Clutter& h);

inline constexpr std::size_t kDefaultPmdNodeBudget = 2'000'000;

/// Minimum number of parts. Searches by peeling: every decomposition can be
/// rearranged so that its first part is an inclusion-maximal positive
/// matching of the current residual, so only those are branched on. Residual
/// edge sets that already failed at a given depth are memoised. When the node
/// budget runs out, returns the proven interval with exact = false and the
/// best decomposition found so far.
PmdResult exact_pmd(const Clutter& h, std::size_t node_budget = kDefaultPmdNodeBudget);

}  // namespace lss
