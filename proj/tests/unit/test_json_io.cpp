#include <doctest.h>

#include "lss/errors.hpp"
#include "lss/graph_io.hpp"
#include "lss/json_io.hpp"
#include "lss/named_instances.hpp"

using namespace lss;

TEST_CASE("graph round trip") {
  const Graph g = Graph::crown(4);
  CHECK(graph_from_json(to_json(g)) == g);
  const Clutter h(4, {{1, 2, 3}, {3, 4}});
  const Clutter back = clutter_from_json(to_json(h));
  CHECK(back.vertex_count() == 4);
  CHECK(back.edges() == h.edges());
}

TEST_CASE("space round trip") {
  for (const VariableSpace& s :
       {VariableSpace::block(4, 3), VariableSpace::generic(2, 5), VariableSpace::symmetric(4),
        VariableSpace::skew(5), VariableSpace::plain({"a", "b", "c"}), VariableSpace::block(3, 2).with_auxiliary("t")}) {
    const SpacePtr back = space_from_json(to_json(s));
    CHECK(*back == s);
  }
  CHECK_THROWS_AS(space_from_json(nlohmann::json{{"layout", "diagonal"}}), ParseError);
}

TEST_CASE("pmd result round trip") {
  const Graph g = Graph::complete_bipartite(2, 3);
  const Clutter h(g);
  const PmdResult r = exact_pmd(h);
  const nlohmann::json j = to_json(r);
  CHECK(j["exact"] == true);
  CHECK(j["upper"] == 4);
  CHECK(j["parts"].size() == 4);
  const PmdResult back = pmd_result_from_json(j, g.vertex_count());
  CHECK(back.lower == r.lower);
  CHECK(back.upper == r.upper);
  REQUIRE(back.decomposition);
  CHECK(back.decomposition->parts == r.decomposition->parts);
  CHECK(verify_pm_decomposition(h, *back.decomposition));
  CHECK(to_json(back) == j);
  nlohmann::json bad = j;
  bad["certificates"][0] = {{"1", "one half"}};
  CHECK_THROWS_AS(pmd_result_from_json(bad, g.vertex_count()), ParseError);
}

TEST_CASE("classification round trip") {
  const Classification c = classify(Graph::complete_bipartite(1, 3), 3, Property::Prime);
  const nlohmann::json j = to_json(c);
  CHECK(j["verdict"] == "FALSE");
  CHECK(j["property"] == "prime");
  CHECK(j["d"] == 3);
  const Classification back = classification_from_json(j);
  CHECK(back.verdict == c.verdict);
  CHECK(back.property == c.property);
  CHECK(back.d == c.d);
  REQUIRE(back.justifications.size() == c.justifications.size());
  for (std::size_t i = 0; i < c.justifications.size(); ++i) {
    CHECK(back.justifications[i].rule == c.justifications[i].rule);
    CHECK(back.justifications[i].cite == c.justifications[i].cite);
    CHECK(back.justifications[i].evidence == c.justifications[i].evidence);
  }
  CHECK_THROWS_AS(classification_from_json(nlohmann::json{{"verdict", "MAYBE"}}), ParseError);
}

TEST_CASE("generator set round trip") {
  const GeneratorSet gens = lss_generators(Graph::cycle(4), 2);
  const nlohmann::json j = to_json(gens);
  CHECK(j["generators"].size() == 4);
  const GeneratorSet back = generator_set_from_json(j);
  CHECK(*back.space == *gens.space);
  CHECK(back.provenance == gens.provenance);
  CHECK(back.generators == gens.generators);

  const NonRadicalExample ex = nonradical_example("nrad2");
  const GeneratorSet back2 = generator_set_from_json(to_json(ex.ideal));
  CHECK(back2.generators == ex.ideal.generators);
}

TEST_CASE("groebner basis and witness serialization") {
  auto space = std::make_shared<const VariableSpace>(VariableSpace::plain({"x", "y"}));
  const GroebnerBasis gb = buchberger(parse_polynomial_list("x^2, x*y", space), space, MonomialOrder::degrevlex(2));
  const nlohmann::json j = to_json(gb);
  CHECK(j["unit"] == false);
  CHECK(j["generators"].size() == 2);

  const GeneratorSet ideal{parse_polynomial_list("x^2", space), space, "test"};
  const WitnessReport r = witness_test(ideal, parse_polynomial("x", space));
  const nlohmann::json w = to_json(r);
  CHECK(w["verdict"] == true);
  CHECK(w.contains("separating"));
}

TEST_CASE("asym bounds serialization") {
  const nlohmann::json j = to_json(asym_bounds(Graph::complete(15), Property::Prime, FieldAssumption::Char0));
  CHECK(j["lower"] == 21);
  CHECK(j["upper"] == 28);
}
