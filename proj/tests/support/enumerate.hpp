#pragma once

#include <cstddef>
#include <vector>

#include "lss/graph.hpp"

namespace lss::testing {

/// One representative per isomorphism class of graphs on exactly n vertices
/// (isolated vertices allowed). n <= 6.
std::vector<Graph> all_graphs(int n);
/// All graphs on 1..max_n vertices.
std::vector<Graph> all_graphs_up_to(int max_n);

/// Non-isomorphic trees on exactly n vertices.
std::vector<Graph> all_trees(int n);

/// Every matching (including the empty one), as indices into g.edges().
std::vector<std::vector<std::size_t>> all_matchings(const Graph& g);

/// All subgraphs of g on the same vertex set obtained by deleting edges.
std::vector<Graph> edge_deleted_subgraphs(const Graph& g);

/// Brute force: does g contain a cycle of even length?
bool brute_even_cycle(const Graph& g);

}  // namespace lss::testing
