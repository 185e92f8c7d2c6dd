#pragma once

#include <cstdint>
#include <vector>

#include "lss/polynomial.hpp"
#include "lss/posmatch.hpp"

namespace lss {

/// Term orders on a fixed number of variables. Variable 0 is the largest.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, Weighted, Elimination };

  MonomialOrder() = default;
  static MonomialOrder degrevlex(int variables);
  static MonomialOrder lex(int variables);
  /// Total degree first, then the weight rows in turn, then degrevlex.
  static MonomialOrder weighted(int variables, std::vector<std::vector<Rational>> rows);
  /// Degrevlex on the `dropped` variables first, ties broken by degrevlex on
  /// the remaining ones. Any polynomial whose leading monomial avoids the
  /// dropped variables avoids them entirely.
  static MonomialOrder elimination(int variables, std::uint64_t dropped);

  Kind kind() const { return kind_; }
  int variables() const { return variables_; }
  const std::vector<std::vector<Rational>>& weight_rows() const { return rows_; }
  std::uint64_t dropped() const { return dropped_; }

  /// Negative, zero or positive as a is smaller than, equal to or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  Kind kind_ = Kind::Degrevlex;
  int variables_ = 0;
  std::vector<std::vector<Rational>> rows_;
  // Integer multiples of rows_, used for comparisons.
  std::vector<std::vector<long long>> scaled_;
  std::vector<std::vector<Integer>> scaled_big_;
  bool big_ = false;
  std::uint64_t dropped_ = 0;

  int compare_weights(const Monomial& a, const Monomial& b) const;
};

/// Degrevlex restricted to the variables in `mask`.
int degrevlex_compare(const Monomial& a, const Monomial& b, int variables, std::uint64_t mask = ~std::uint64_t{0});

/// Largest term with its coefficient. Throws std::invalid_argument for zero.
Polynomial initial_term(const Polynomial& f, const MonomialOrder& order);
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Weight rows w^_l(y[i,k]) = w_l(i) when k = l and 0 otherwise, one per part,
/// on top of degree and under a degrevlex tie-break. Throws
/// std::invalid_argument when the space is not a block space, when it has
/// fewer columns than parts, or when certificates are missing.
MonomialOrder order_from_decomposition(const VariableSpace& space, const PmDecomposition& d);

}  // namespace lss
