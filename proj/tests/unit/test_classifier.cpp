#include <doctest.h>

#include <map>

#include "enumerate.hpp"
#include "lss/classifier.hpp"
#include "lss/errors.hpp"
#include "lss/graph_io.hpp"
#include "lss/named_instances.hpp"

using namespace lss;

namespace {

constexpr FieldAssumption kAll[] = {FieldAssumption::Char0, FieldAssumption::Char2, FieldAssumption::CharOdd,
                                    FieldAssumption::Unspecified};

bool fired(const Classification& c, const std::string& rule) {
  for (const auto& j : c.justifications) {
    if (j.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("documented verdicts") {
  const auto c5 = classify(Graph::cycle(5), 2, Property::CompleteIntersection);
  CHECK(c5.verdict == Verdict::True);
  CHECK(fired(c5, "d2-ci"));

  const auto claw = classify(Graph::complete_bipartite(1, 3), 3, Property::Prime);
  CHECK(claw.verdict == Verdict::False);
  CHECK(fired(claw, "d3-prime"));
  CHECK(fired(claw, "kab-obstruction"));

  const auto k23 = classify(Graph::complete_bipartite(2, 3), 4, Property::Prime);
  CHECK(k23.verdict == Verdict::False);
  CHECK(fired(k23, "kab-obstruction"));

  const Graph spider(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
  const auto tree = classify(spider, 4, Property::Prime);
  CHECK(tree.verdict == Verdict::True);
  CHECK(fired(tree, "forest"));

  const auto k15 = classify(Graph::complete(15), 20, Property::Prime, FieldAssumption::Char0);
  CHECK(k15.verdict == Verdict::False);
  CHECK(fired(k15, "clique-obstruction"));
  // Padding with isolated vertices changes nothing.
  std::vector<std::pair<int, int>> edges;
  const Graph k15g = Graph::complete(15);
  for (const Edge& e : k15g.edges()) edges.emplace_back(e.u, e.v);
  CHECK(classify(Graph(17, edges), 20, Property::Prime, FieldAssumption::Char0).verdict == Verdict::False);
  // Without characteristic 0 the clique rule is silent.
  CHECK(classify(Graph::complete(15), 20, Property::Prime).verdict == Verdict::Unknown);
}

TEST_CASE("every decisive verdict is justified") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    Classifier c(g, FieldAssumption::Char0);
    for (int d = 1; d <= 5; ++d) {
      for (Property p : {Property::Radical, Property::CompleteIntersection, Property::Prime}) {
        const auto r = c.classify(d, p);
        CHECK(r.d == d);
        CHECK(r.property == p);
        if (r.verdict != Verdict::Unknown) CHECK_FALSE(r.justifications.empty());
      }
    }
  }
}

TEST_CASE("small d rules") {
  CHECK(classify(Graph::complete(5), 1, Property::Radical).verdict == Verdict::True);
  CHECK(classify(Graph(4, {{1, 2}, {3, 4}}), 1, Property::CompleteIntersection).verdict == Verdict::True);
  CHECK(classify(Graph::path(3), 1, Property::CompleteIntersection).verdict == Verdict::False);
  CHECK(classify(Graph::edgeless(3), 1, Property::Prime).verdict == Verdict::True);
  CHECK(classify(Graph(2, {{1, 2}}), 1, Property::Prime).verdict == Verdict::False);
  CHECK(classify(Graph::cycle(4), 2, Property::CompleteIntersection).verdict == Verdict::False);
  CHECK(classify(Graph::cycle(5), 3, Property::Prime).verdict == Verdict::True);
}

TEST_CASE("characteristic gating of the d = 2 radical rule") {
  const Graph odd = Graph::cycle(5);
  const Graph even = Graph::cycle(6);
  CHECK(classify(odd, 2, Property::Radical, FieldAssumption::Char0).verdict == Verdict::True);
  CHECK(classify(odd, 2, Property::Radical, FieldAssumption::CharOdd).verdict == Verdict::True);
  CHECK(classify(odd, 2, Property::Radical, FieldAssumption::Char2).verdict == Verdict::False);
  CHECK(classify(odd, 2, Property::Radical, FieldAssumption::Unspecified).verdict == Verdict::Unknown);
  CHECK(classify(even, 2, Property::Radical, FieldAssumption::Char2).verdict == Verdict::True);
  CHECK(classify(even, 2, Property::Radical, FieldAssumption::Unspecified).verdict == Verdict::True);
}

TEST_CASE("crown obstruction needs characteristic 0") {
  // B_4 contains no K_{a,b} with a+b = 5, so at d = 4 only the crown rule speaks.
  const Graph b4 = Graph::crown(4);
  CHECK(classify(b4, 4, Property::Prime, FieldAssumption::Char0).verdict == Verdict::False);
  CHECK(classify(b4, 4, Property::Prime, FieldAssumption::CharOdd).verdict == Verdict::Unknown);
  CHECK(classify(b4, 3, Property::CompleteIntersection, FieldAssumption::Char0).verdict == Verdict::False);
}

TEST_CASE("complete bipartite graphs") {
  const Graph g = Graph::complete_bipartite(3, 4);
  CHECK(classify(g, 5, Property::CompleteIntersection).verdict == Verdict::False);
  CHECK(classify(g, 6, Property::CompleteIntersection).verdict == Verdict::True);
  CHECK(classify(g, 6, Property::Prime).verdict == Verdict::False);
  CHECK(classify(g, 7, Property::Prime).verdict == Verdict::True);
  CHECK(classify(g, 3, Property::Radical).verdict == Verdict::True);
}

TEST_CASE("imported witnesses") {
  const NonRadicalExample ex = nonradical_example("nrad1");
  const WitnessReport r = witness_test(ex.ideal, ex.witness);
  Classifier c(ex.graph, FieldAssumption::Char0);
  CHECK(c.classify(3, Property::Radical).verdict == Verdict::Unknown);
  c.import_witness(3, r);
  const auto v = c.classify(3, Property::Radical);
  CHECK(v.verdict == Verdict::False);
  CHECK(fired(v, "witness"));
  Classifier p(ex.graph, FieldAssumption::CharOdd);
  p.import_witness(3, r);
  CHECK(p.classify(3, Property::Radical).verdict == Verdict::Unknown);
  WitnessReport empty;
  CHECK_THROWS_AS(c.import_witness(3, empty), std::invalid_argument);
}

TEST_CASE("no contradictions up to d = 8 on graphs with at most 6 vertices") {
  for (const Graph& g : lss::testing::all_graphs_up_to(6)) {
    for (FieldAssumption f : kAll) {
      Classifier c(g, f);
      for (int d = 1; d <= 8; ++d) {
        for (Property p : {Property::Radical, Property::CompleteIntersection, Property::Prime}) {
          CHECK_NOTHROW(c.classify(d, p));
        }
      }
    }
  }
}

TEST_CASE("TRUE verdicts survive edge deletion") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    Classifier big(g, FieldAssumption::Char0);
    const auto subs = lss::testing::edge_deleted_subgraphs(g);
    for (int d = 1; d <= 4; ++d) {
      for (Property p : {Property::CompleteIntersection, Property::Prime}) {
        if (big.classify(d, p).verdict != Verdict::True) continue;
        for (const Graph& s : subs) {
          CHECK_MESSAGE(classify(s, d, p, FieldAssumption::Char0).verdict != Verdict::False,
                        to_string(s) << " inside " << to_string(g));
        }
      }
    }
  }
}

TEST_CASE("w_n") {
  CHECK(w_of(15) == 6);
  CHECK(w_of(1) == 2);
  CHECK(w_of(3) == 3);
  CHECK(w_of(16) == 6);
  CHECK(w_of(21) == 7);
  CHECK_THROWS_AS(w_of(0), std::invalid_argument);
}

TEST_CASE("asym bounds") {
  const AsymBounds kmn = asym_bounds(Graph::complete_bipartite(2, 3), Property::Prime);
  CHECK(kmn.lower == 5);
  CHECK(kmn.upper == 5);
  const Graph spider(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
  const AsymBounds tree = asym_bounds(spider, Property::Prime);
  CHECK(tree.lower == 4);
  CHECK(tree.upper == 4);
  const AsymBounds k15 = asym_bounds(Graph::complete(15), Property::Prime, FieldAssumption::Char0);
  CHECK(k15.lower == 21);
  CHECK(k15.upper == 28);
  const AsymBounds ci15 = asym_bounds(Graph::complete(15), Property::CompleteIntersection, FieldAssumption::Char0);
  CHECK(ci15.lower == 20);
  CHECK(ci15.upper == 27);
  CHECK_THROWS_AS(asym_bounds(Graph::cycle(5), Property::Radical), std::invalid_argument);
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    for (Property p : {Property::CompleteIntersection, Property::Prime}) {
      const AsymBounds b = asym_bounds(g, p, FieldAssumption::Char0);
      CHECK(b.lower <= b.upper);
    }
  }
}

TEST_CASE("transfer reports") {
  const Graph spider(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
  const TransferReport t = transfer_report(spider, 4, FieldAssumption::Char0);
  CHECK(t.applicable);
  auto has = [&](const TransferReport& r, const std::string& s) {
    for (const auto& x : r.statements) {
      if (x.find(s) != std::string::npos) return true;
    }
    return false;
  };
  CHECK(has(t, "I_5(X_G^sym) is prime"));
  const TransferReport any = transfer_report(Graph::complete(5), 2, FieldAssumption::Char0);
  CHECK(has(any, "I_3(X_G^sym) is radical"));
  CHECK(has(any, "Pf_4(X_G^skew) is radical"));
  const TransferReport cp = transfer_report(Graph::cycle(5), 2, FieldAssumption::CharOdd);
  CHECK_FALSE(cp.applicable);
  REQUIRE(cp.statements.size() == 1);
  CHECK(cp.statements[0] == "transfer propositions assume characteristic 0");
  const TransferReport c5 = transfer_report(Graph::cycle(5), 2, FieldAssumption::Char0);
  CHECK(has(c5, "I_3(X_G^sym) has maximal height 6"));
}

TEST_CASE("parsing property and field names") {
  CHECK(parse_property("ci") == Property::CompleteIntersection);
  CHECK(parse_field("p") == FieldAssumption::CharOdd);
  CHECK_THROWS_AS(parse_property("smooth"), ParseError);
  CHECK_THROWS_AS(parse_field("3"), ParseError);
}
