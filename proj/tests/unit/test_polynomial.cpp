#include <doctest.h>

#include <random>

#include "lss/errors.hpp"
#include "lss/ideal_forge.hpp"
#include "lss/monomial_order.hpp"
#include "lss/polynomial.hpp"

using namespace lss;

namespace {

SpacePtr xy() { return std::make_shared<const VariableSpace>(VariableSpace::plain({"x", "y"})); }

}  // namespace

TEST_CASE("arithmetic") {
  const SpacePtr s = xy();
  const Polynomial x = Polynomial::variable(s, 0);
  const Polynomial y = Polynomial::variable(s, 1);
  CHECK((x + y) + (x - y) == x * Rational(2));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * Polynomial(s)).is_zero());
  CHECK((x + y).pow(2) == x * x + x * y * Polynomial(s, 2) + y * y);
  CHECK((x - x).is_zero());
}

TEST_CASE("parse and print") {
  const SpacePtr s = xy();
  const Polynomial f = parse_polynomial("x^2 - 1/2*x*y + (y+1)*(y-1)", s);
  CHECK(f == parse_polynomial("x^2 + y^2 - x*y/2 - 1", s));
  CHECK(parse_polynomial(to_string(f), s) == f);
  CHECK_THROWS_AS(parse_polynomial("x + z", s), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", s), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / 0", s), ParseError);
  const auto list = parse_polynomial_list("b*a, a^2");
  REQUIRE(list.size() == 2);
  CHECK(list[0].space()->name(0) == "b");
}

TEST_CASE("block space names round-trip") {
  const auto gens = lss_generators(Graph::complete(3), 2);
  for (const auto& f : gens.generators) CHECK(parse_polynomial(to_string(f), gens.space) == f);
  CHECK(to_string(gens.generators[0]) == "y[1,1]*y[2,1] + y[1,2]*y[2,2]");
}

TEST_CASE("json round-trip") {
  const SpacePtr s = xy();
  const Polynomial f = parse_polynomial("3/7*x^3*y - 2*y + 5", s);
  CHECK(polynomial_from_json(to_json(f), s) == f);
}

TEST_CASE("monomials") {
  Monomial a = Monomial::variable(0, 2);
  const Monomial b = Monomial::variable(1);
  const Monomial ab = a * b;
  CHECK(ab.degree() == 3);
  CHECK(a.divides(ab));
  CHECK(a.quotient_of(ab) == b);
  CHECK(a.lcm(b) == ab);
  CHECK(a.coprime(b));
  CHECK_FALSE(a.is_squarefree());
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(0, 100), std::overflow_error);
}

TEST_CASE("initial terms") {
  const SpacePtr s = xy();
  const Polynomial f = parse_polynomial("x^2 + x*y + y^2", s);
  CHECK(initial_term(f, MonomialOrder::lex(2)) == parse_polynomial("x^2", s));
  CHECK(initial_term(Polynomial(s, 5), MonomialOrder::degrevlex(2)) == Polynomial(s, 5));
  CHECK_THROWS_AS(initial_term(Polynomial(s), MonomialOrder::lex(2)), std::invalid_argument);
  const auto gens = lss_generators(Graph(2, {{1, 2}}), 2);
  const Monomial lead = leading_monomial(gens.generators[0], MonomialOrder::degrevlex(4));
  CHECK(monomial_to_string(lead, *gens.space) == "y[1,1]*y[2,1]");
}

TEST_CASE("orders are total on random monomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 2);
  const int n = 6;
  std::vector<MonomialOrder> orders{MonomialOrder::degrevlex(n), MonomialOrder::lex(n),
                                    MonomialOrder::elimination(n, 0b11),
                                    MonomialOrder::weighted(n, {{3, Rational(-1, 2), 0, 2, 1, -5}, {1, 1, 1, 0, 0, 0}})};
  auto random_monomial = [&] {
    Monomial m;
    for (int i = 0; i < n; ++i) m.set(i, e(rng));
    return m;
  };
  for (const auto& o : orders) {
    for (int trial = 0; trial < 400; ++trial) {
      const Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
      CHECK(o.compare(a, b) == -o.compare(b, a));
      CHECK((o.compare(a, b) == 0) == (a == b));
      if (o.less(a, b) && o.less(b, c)) CHECK(o.less(a, c));
      // Multiplicative.
      if (o.less(a, b)) CHECK(o.less(a * c, b * c));
    }
  }
}

TEST_CASE("order from a decomposition") {
  const Clutter h(Graph::path(3));
  const std::size_t e12 = *h.index_of({1, 2});
  const std::size_t e23 = *h.index_of({2, 3});
  PmDecomposition d;
  d.parts = {{e12}, {e23}};
  d.certificates = {WeightCertificate{{2, 1, -3}}, WeightCertificate{{0, 1, 1}}};
  const auto gens = lss_generators(h, 2);
  const MonomialOrder o = order_from_decomposition(*gens.space, d);
  CHECK(monomial_to_string(leading_monomial(gens.generators[e12], o), *gens.space) == "y[1,1]*y[2,1]");
  CHECK(monomial_to_string(leading_monomial(gens.generators[e23], o), *gens.space) == "y[2,2]*y[3,2]");
  CHECK_THROWS_AS(order_from_decomposition(*lss_generators(h, 1).space, d), std::invalid_argument);
}

TEST_CASE("multidegrees") {
  const auto gens = lss_generators(Graph(4, {{1, 2}}), 3);
  CHECK(multidegree_of(gens.generators[0]) == std::vector<int>{1, 1, 0, 0});
  const Polynomial mixed = Polynomial::variable(gens.space, gens.space->at(1, 1)) +
                           Polynomial::variable(gens.space, gens.space->at(2, 1));
  CHECK_FALSE(multidegree_of(mixed));
  CHECK(multidegree_of(Polynomial(gens.space, 4)) == std::vector<int>{0, 0, 0, 0});
}
