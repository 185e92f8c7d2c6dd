#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lss/errors.hpp"
#include "lss/ideal_forge.hpp"
#include "lss/monomial_order.hpp"
#include "lss/polynomial.hpp"

namespace lss {

/// Reduced, monic Groebner basis.
struct GroebnerBasis {
  std::vector<Polynomial> basis;
  MonomialOrder order;
  SpacePtr space;

  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;
};

/// Limits the number of S-pair reductions; nullopt means unlimited.
using PairBudget = std::optional<std::size_t>;

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy (smallest lcm degree, then pair creation order).
/// Coefficients are kept integral with content removal during reduction.
/// Throws BudgetExhausted when more than `budget` pairs would be reduced.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const SpacePtr& space, const MonomialOrder& order,
                         PairBudget budget = std::nullopt);
GroebnerBasis buchberger(const GeneratorSet& gens, const MonomialOrder& order, PairBudget budget = std::nullopt);

/// Remainder of f on division by the basis; no term of it is divisible by a
/// leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// S-polynomial of f and g under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Generators of the ideal intersected with the subring avoiding the
/// `dropped` variables (bit i for variable i), in the same space.
GeneratorSet eliminate(const GeneratorSet& gens, std::uint64_t dropped, PairBudget budget = std::nullopt);

/// Exact quotient f / g. Throws std::invalid_argument when g does not divide f.
Polynomial divide_exactly(const Polynomial& f, const Polynomial& g);

/// Generators of J : g, obtained from J intersected with (g) through an
/// auxiliary variable t: eliminate t from tJ + (1-t)(g), then divide by g.
/// Throws std::invalid_argument when g is zero.
GeneratorSet colon(const GeneratorSet& j, const Polynomial& g, PairBudget budget = std::nullopt);

/// Krull dimension of S/I read off the leading monomials: the number of
/// variables minus the smallest variable set meeting every leading monomial.
/// -1 when the basis is {1}.
int quotient_dimension(const GroebnerBasis& gb);
int quotient_dimension(const GeneratorSet& gens, const MonomialOrder& order, PairBudget budget = std::nullopt);
/// Number of variables minus the quotient dimension, under degrevlex.
int codimension(const GeneratorSet& gens, PairBudget budget = std::nullopt);

/// True iff the codimension equals the number of nonzero generators. The
/// generators are assumed to be a minimal system.
bool is_complete_intersection_gb(const GeneratorSet& gens, PairBudget budget = std::nullopt);

}  // namespace lss
