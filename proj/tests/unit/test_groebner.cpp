#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "lss/classifier.hpp"
#include "lss/groebner.hpp"

using namespace lss;

namespace {

GeneratorSet over(const std::vector<std::string>& names, const std::string& text) {
  auto space = std::make_shared<const VariableSpace>(VariableSpace::plain(names));
  return {parse_polynomial_list(text, space), space, text};
}

Polynomial p(const GeneratorSet& s, const std::string& text) { return parse_polynomial(text, s.space); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& f : ps) out.push_back(to_string(f));
  return out;
}

}  // namespace

TEST_CASE("small bases") {
  const auto a = over({"x", "y"}, "x^2, x*y");
  CHECK(texts(buchberger(a, MonomialOrder::lex(2)).basis) == std::vector<std::string>{"x*y", "x^2"});
  const auto b = over({"x", "y"}, "x - y, x + y");
  CHECK(texts(buchberger(b, MonomialOrder::degrevlex(2)).basis) == std::vector<std::string>{"y", "x"});
  const auto c = over({"x"}, "1");
  CHECK(buchberger(c, MonomialOrder::degrevlex(1)).is_unit());
}

TEST_CASE("a textbook basis") {
  // x^3 - 2xy, x^2 y - 2y^2 + x under degrevlex: the reduced basis is
  // {x^2, xy, y^2 - x/2}.
  const auto s = over({"x", "y"}, "x^3 - 2*x*y, x^2*y - 2*y^2 + x");
  const GroebnerBasis gb = buchberger(s, MonomialOrder::degrevlex(2));
  CHECK(texts(gb.basis) == std::vector<std::string>{"y^2 - 1/2*x", "x*y", "x^2"});
}

TEST_CASE("normal forms") {
  const auto s = over({"x", "y"}, "x");
  const GroebnerBasis gb = buchberger(s, MonomialOrder::degrevlex(2));
  CHECK(normal_form(p(s, "x^2"), gb).is_zero());
  CHECK(normal_form(p(s, "y"), gb) == p(s, "y"));
  const auto lss = lss_generators(Graph::cycle(5), 2);
  const GroebnerBasis g5 = buchberger(lss, MonomialOrder::degrevlex(lss.space->size()));
  for (const auto& f : lss.generators) CHECK(ideal_contains(g5, f));
}

TEST_CASE("S-polynomials of the basis reduce to zero") {
  const auto lss = lss_generators(Graph::complete(4), 2);
  const MonomialOrder o = MonomialOrder::degrevlex(lss.space->size());
  const GroebnerBasis gb = buchberger(lss, o);
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      CHECK(normal_form(s_polynomial(gb.basis[i], gb.basis[j], o), gb).is_zero());
    }
  }
}

TEST_CASE("bases do not depend on generator order") {
  std::mt19937 rng(3);
  auto lss = lss_generators(Graph::cycle(5), 2);
  const MonomialOrder o = MonomialOrder::degrevlex(lss.space->size());
  const auto reference = buchberger(lss, o).basis;
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(lss.generators.begin(), lss.generators.end(), rng);
    CHECK(buchberger(lss, o).basis == reference);
  }
}

TEST_CASE("budget exhaustion") {
  const auto lss = lss_generators(Graph::complete(5), 3);
  CHECK_THROWS_AS(buchberger(lss, MonomialOrder::degrevlex(lss.space->size()), 3), BudgetExhausted);
}

TEST_CASE("elimination") {
  const auto s = over({"t", "x", "y"}, "t*x - 1, t*y");
  const auto e = eliminate(s, 0b1);
  CHECK(texts(e.generators) == std::vector<std::string>{"y"});
  const auto empty = over({"x", "y"}, "");
  CHECK(eliminate(GeneratorSet{{}, empty.space, ""}, 0b1).size() == 0);
  const auto x = over({"x", "y"}, "x");
  CHECK(texts(eliminate(x, 0b10).generators) == std::vector<std::string>{"x"});
}

TEST_CASE("exact division") {
  const auto s = over({"x", "y"}, "x");
  CHECK(divide_exactly(p(s, "x^2 - y^2"), p(s, "x + y")) == p(s, "x - y"));
  CHECK_THROWS_AS(divide_exactly(p(s, "x^2 + y"), p(s, "x")), std::invalid_argument);
}

TEST_CASE("colon ideals") {
  const auto s = over({"x", "y"}, "x^2");
  CHECK(texts(colon(s, p(s, "x")).generators) == std::vector<std::string>{"x"});
  CHECK(texts(colon(s, p(s, "x^2")).generators) == std::vector<std::string>{"1"});
  const auto xy = over({"x", "y"}, "x*y");
  CHECK(texts(colon(xy, p(xy, "x")).generators) == std::vector<std::string>{"y"});
  CHECK_THROWS_AS(colon(s, Polynomial(s.space)), std::invalid_argument);
}

TEST_CASE("dimension") {
  const auto x = over({"x", "y"}, "x");
  CHECK(quotient_dimension(x, MonomialOrder::degrevlex(2)) == 1);
  const auto one = over({"x", "y"}, "1");
  CHECK(quotient_dimension(one, MonomialOrder::degrevlex(2)) == -1);
  CHECK_FALSE(is_complete_intersection_gb(one));
  CHECK(codimension(lss_generators(Graph::cycle(5), 2)) == 5);
  CHECK(codimension(lss_generators(Graph::cycle(4), 2)) < 4);
  CHECK(is_complete_intersection_gb(lss_generators(Graph::cycle(5), 2)));
  CHECK_FALSE(is_complete_intersection_gb(lss_generators(Graph::cycle(4), 2)));
}

TEST_CASE("Groebner ci agrees with decisive classifier verdicts up to d = 4") {
  int compared = 0;
  for (const Graph& g : lss::testing::all_graphs_up_to(5)) {
    if (g.edge_count() == 0) continue;
    Classifier c(g, FieldAssumption::Char0);
    for (int d = 1; d <= 4; ++d) {
      const Verdict v = c.classify(d, Property::CompleteIntersection).verdict;
      if (v == Verdict::Unknown) continue;
      try {
        const bool ci = is_complete_intersection_gb(lss_generators(g, d), 20000);
        CHECK_MESSAGE(ci == (v == Verdict::True), to_string(g) << " d=" << d);
        ++compared;
      } catch (const BudgetExhausted&) {
      }
    }
  }
  CHECK(compared > 100);
}
