#include <doctest.h>

#include "enumerate.hpp"
#include "lss/graph_io.hpp"
#include "lss/posmatch.hpp"

using namespace lss;

namespace {

std::vector<std::size_t> all_edges(const Clutter& h) {
  std::vector<std::size_t> e(h.edge_count());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
  return e;
}

std::size_t edge_index(const Clutter& h, Vertex u, Vertex v) { return *h.index_of({u, v}); }

}  // namespace

TEST_CASE("positive matching on P3") {
  const Clutter h(Graph::path(3));
  const std::vector<std::size_t> m{edge_index(h, 1, 2)};
  auto r = is_positive_matching(h, m);
  REQUIRE(r);
  const auto& w = *r.certificate;
  CHECK(w(1) + w(2) > 0);
  CHECK(w(2) + w(3) < 0);
  CHECK(certifies(h, w, m, all_edges(h)));
  // Hand-made certificate w = (2, 1, -3).
  WeightCertificate hand{{Rational(2), Rational(1), Rational(-3)}};
  CHECK(certifies(h, hand, m, all_edges(h)));
}

TEST_CASE("perfect matching of K22 is not positive") {
  const Graph g = Graph::complete_bipartite(2, 2);
  const Clutter h(g);
  const std::vector<std::size_t> m{edge_index(h, 1, 3), edge_index(h, 2, 4)};
  CHECK_FALSE(is_positive_matching(h, m));
  CHECK_FALSE(is_positive_matching_full(h, m, all_edges(h)));
  const Bipartition b{{1, 2}, {3, 4}};
  CHECK_FALSE(is_positive_matching_bipartite(g, b, m));
  const std::vector<std::size_t> one{edge_index(h, 1, 3)};
  CHECK(is_positive_matching(h, one));
  CHECK(is_positive_matching_bipartite(g, b, one));
}

TEST_CASE("single edge and invalid input") {
  const Clutter h(Graph(2, {{1, 2}}));
  CHECK(is_positive_matching(h, std::vector<std::size_t>{0}));
  const Clutter p(Graph::path(3));
  auto r = is_positive_matching(p, std::vector<std::size_t>{0, 1});
  CHECK_FALSE(r);
  CHECK(r.reason == "not a matching");
  CHECK_THROWS_AS(is_positive_matching(p, std::vector<std::size_t>{7}), std::invalid_argument);
  CHECK_THROWS_AS(is_positive_matching_bipartite(Graph::path(3), Bipartition{{2}, {1, 3}}, std::vector<std::size_t>{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("restricted and full systems agree on small graphs") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    const Clutter h(g);
    for (const auto& m : lss::testing::all_matchings(g)) {
      const bool a = static_cast<bool>(is_positive_matching(h, m));
      const bool b = static_cast<bool>(is_positive_matching_full(h, m, all_edges(h)));
      CHECK_MESSAGE(a == b, to_string(g));
    }
  }
}

TEST_CASE("positivity is hereditary") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    const Clutter h(g);
    for (const auto& m : lss::testing::all_matchings(g)) {
      if (m.empty() || !is_positive_matching(h, m)) continue;
      for (std::size_t drop = 0; drop < m.size(); ++drop) {
        std::vector<std::size_t> sub = m;
        sub.erase(sub.begin() + static_cast<long>(drop));
        CHECK(is_positive_matching(h, sub));
      }
    }
  }
}

TEST_CASE("hypergraph positivity") {
  const Clutter h(5, {{1, 2, 3}, {3, 4, 5}, {1, 4}});
  CHECK(is_positive_matching(h, std::vector<std::size_t>{*h.index_of({1, 2, 3})}));
  CHECK(is_positive_matching(h, std::vector<std::size_t>{*h.index_of({1, 4})}));
}

TEST_CASE("verify_pm_decomposition") {
  const Clutter h(Graph(2, {{1, 2}}));
  PmDecomposition one{{{0}}, {WeightCertificate{{Rational(1), Rational(1)}}}};
  CHECK(verify_pm_decomposition(h, one));
  const Clutter p(Graph::path(3));
  PmDecomposition overlap{{{0}, {0, 1}},
                          {WeightCertificate{{2, 1, -3}}, WeightCertificate{{1, 1, 1}}}};
  CHECK_FALSE(verify_pm_decomposition(p, overlap));
  PmDecomposition missing{{{0}}, {WeightCertificate{{2, 1, -3}}}};
  CHECK_FALSE(verify_pm_decomposition(p, missing));
  PmDecomposition bad_weights{{{0}, {1}}, {WeightCertificate{{1, 1, 1}}, WeightCertificate{{0, 1, 1}}}};
  CHECK_FALSE(verify_pm_decomposition(p, bad_weights));
}

TEST_CASE("pmd bounds") {
  CHECK(pmd_bounds(Graph::complete_bipartite(3, 3)) == std::pair{3, 5});
  CHECK(pmd_bounds(Graph::path(5)) == std::pair{2, 2});
  CHECK(pmd_bounds(Graph::edgeless(4)) == std::pair{0, 0});
  CHECK(pmd_bounds(Graph::complete(5)).second == 7);
}

TEST_CASE("greedy decompositions") {
  CHECK(greedy_pm_decomposition(Clutter(Graph::complete(4))).size() == 5);
  const Graph star = Graph::complete_bipartite(1, 4);
  CHECK(greedy_pm_decomposition(Clutter(star)).size() == 4);
  const Graph m(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(greedy_pm_decomposition(Clutter(m)).size() == 1);
  for (const Graph& g : lss::testing::all_graphs_up_to(6)) {
    const Clutter h(g);
    const PmDecomposition d = greedy_pm_decomposition(h);
    CHECK_MESSAGE(verify_pm_decomposition(h, d), to_string(g));
    CHECK(static_cast<int>(d.size()) <= pmd_bounds(g).second);
  }
}

TEST_CASE("exact pmd examples") {
  auto value = [](const Graph& g) {
    const PmdResult r = exact_pmd(Clutter(g));
    REQUIRE(r.exact);
    return r.upper;
  };
  CHECK(value(Graph::complete_bipartite(2, 2)) == 3);
  CHECK(value(Graph::complete(3)) == 3);
  CHECK(value(Graph::complete_bipartite(1, 4)) == 4);
  CHECK(value(Graph::complete_bipartite(3, 4)) == 6);
  CHECK(value(Graph::path(5)) == 2);
  CHECK(value(Graph::edgeless(3)) == 0);
}

TEST_CASE("exact pmd respects the bounds and edge deletion") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    const PmdResult r = exact_pmd(Clutter(g));
    REQUIRE(r.exact);
    const auto [lo, hi] = pmd_bounds(g);
    CHECK(lo <= r.upper);
    CHECK(r.upper <= hi);
    // Deleting the last edge never increases pmd.
    if (g.edge_count() > 0) {
      std::vector<std::size_t> keep;
      for (std::size_t e = 0; e + 1 < g.edge_count(); ++e) keep.push_back(e);
      CHECK(exact_pmd(Clutter(g.edge_subgraph(keep))).upper <= r.upper);
    }
  }
}

TEST_CASE("exact pmd is invariant under relabeling") {
  const Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
  const std::vector<Vertex> perm{3, 5, 1, 2, 4};
  CHECK(exact_pmd(Clutter(g)).upper == exact_pmd(Clutter(g.relabeled(perm))).upper);
}

TEST_CASE("tiny node budget reports an interval") {
  const PmdResult r = exact_pmd(Clutter(named_graph("nrad2")), 1);
  CHECK(r.lower <= r.upper);
  REQUIRE(r.decomposition);
  CHECK(verify_pm_decomposition(Clutter(named_graph("nrad2")), *r.decomposition));
}
