#include <doctest.h>

#include "enumerate.hpp"
#include "lss/named_instances.hpp"
#include "lss/witness.hpp"

using namespace lss;

namespace {

GeneratorSet over(const std::vector<std::string>& names, const std::string& text) {
  auto space = std::make_shared<const VariableSpace>(VariableSpace::plain(names));
  return {parse_polynomial_list(text, space), space, text};
}

}  // namespace

TEST_CASE("witness on principal ideals") {
  const auto sq = over({"x"}, "x^2");
  const WitnessReport r = witness_test(sq, parse_polynomial("x", sq.space));
  CHECK(r.verdict);
  REQUIRE(r.separating);
  const auto lin = over({"x"}, "x");
  CHECK_FALSE(witness_test(lin, parse_polynomial("x", lin.space)).verdict);
  CHECK_THROWS_AS(witness_test(lin, Polynomial(lin.space)), std::invalid_argument);
}

TEST_CASE("witness search") {
  const auto sq = over({"x", "y"}, "x^2");
  const GeneratorSet pool{parse_polynomial_list("y, x", sq.space), sq.space, "pool"};
  const WitnessSearch s = search_witness(sq, pool);
  REQUIRE(s.found);
  CHECK(to_string(s.found->g) == "x");
  const auto rad = over({"x", "y"}, "x");
  const GeneratorSet pool2{parse_polynomial_list("x, y, x + y, x*y", rad.space), rad.space, "pool"};
  const WitnessSearch none = search_witness(rad, pool2);
  CHECK_FALSE(none.found);
  CHECK(none.tried == 4);
}

TEST_CASE("non-radical examples at d = 3") {
  for (const char* name : {"nrad1", "nrad2", "nrad3"}) {
    const NonRadicalExample ex = nonradical_example(name);
    const WitnessReport r = witness_test(ex.ideal, ex.witness, 200000);
    CHECK_MESSAGE(r.verdict, name);
  }
  CHECK(nonradical_example("nrad1").witness_rows == std::vector<int>{1, 5, 6});
  CHECK_THROWS_AS(nonradical_example("nrad4"), ParseError);
}

TEST_CASE("minor pool finds the nrad1 witness") {
  const NonRadicalExample ex = nonradical_example("nrad1");
  const GeneratorSet pool = parse_pool("minors:3", ex.ideal);
  CHECK(pool.size() == 20);
  const WitnessSearch s = search_witness(ex.ideal, pool, 200000);
  CHECK(s.found);
  CHECK_THROWS_AS(parse_pool("minors:9", ex.ideal), ParseError);
  CHECK_THROWS_AS(parse_pool("rows:2", ex.ideal), ParseError);
}

TEST_CASE("radical complete intersection certificates at d = pmd") {
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    const Clutter h(g);
    const PmdResult r = exact_pmd(h);
    REQUIRE(r.decomposition);
    const int d = std::max(1, r.upper);
    const CertificationResult c = certify_radical_ci(h, d, *r.decomposition);
    CHECK_MESSAGE(c, to_string(g) << ": " << c.failure);
    if (c) {
      CHECK(c.certificate->initial_monomials.size() == g.edge_count());
      // The initial monomials generate the initial ideal, so the Groebner
      // basis under the certified order has exactly these leading monomials.
      if (g.edge_count() > 0 && d <= 3) {
        const auto gens = lss_generators(h, d);
        const GroebnerBasis gb = buchberger(gens, c.certificate->order);
        auto leads = gb.leading_monomials();
        auto expected = c.certificate->initial_monomials;
        std::sort(leads.begin(), leads.end());
        std::sort(expected.begin(), expected.end());
        CHECK(leads == expected);
      }
    }
  }
  const Clutter k3(Graph::complete(3));
  CHECK_THROWS_AS(certify_radical_ci(k3, 2, *exact_pmd(k3).decomposition), std::invalid_argument);
}

TEST_CASE("hypergraph certificate") {
  const Clutter h(5, {{1, 2, 3}, {3, 4, 5}, {1, 4}});
  const PmdResult r = exact_pmd(h);
  REQUIRE(r.decomposition);
  CHECK(certify_radical_ci(h, r.upper, *r.decomposition));
}
