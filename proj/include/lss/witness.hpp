#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lss/groebner.hpp"
#include "lss/posmatch.hpp"

namespace lss {

struct WitnessReport {
  std::string provenance;
  Polynomial g;
  /// True when J : g differs from J : g^2, which certifies that J is not radical.
  bool verdict = false;
  GeneratorSet colon_g;
  GeneratorSet colon_g2;
  /// A generator h of J : g^2 outside J : g (set when verdict is true);
  /// h g^2 lies in J and h g does not, both re-checked against a basis of J.
  std::optional<Polynomial> separating;
  double seconds = 0;
};

/// Computes J : g and (J : g) : g and compares them by membership. The budget
/// applies to each Groebner computation separately; BudgetExhausted
/// propagates. Throws std::invalid_argument when g is zero.
WitnessReport witness_test(const GeneratorSet& j, const Polynomial& g, PairBudget budget = std::nullopt);

struct WitnessSearch {
  std::optional<WitnessReport> found;
  std::size_t tried = 0;
  /// Candidates abandoned because their budget ran out.
  std::size_t inconclusive = 0;
};

/// Tries the pool in order and stops at the first certified witness.
WitnessSearch search_witness(const GeneratorSet& j, const GeneratorSet& pool, PairBudget per_candidate = std::nullopt);

struct RadicalCiCertificate {
  PmDecomposition decomposition;
  MonomialOrder order;
  /// One per edge, in edge order.
  std::vector<Monomial> initial_monomials;
};

struct CertificationResult {
  std::optional<RadicalCiCertificate> certificate;
  std::string failure;

  explicit operator bool() const { return certificate.has_value(); }
};

/// Checks that under the order built from the decomposition every f_A has
/// initial monomial prod_{i in A} y[i,l] (A in part l), and that these are
/// squarefree and pairwise coprime. Throws std::invalid_argument when d is
/// smaller than the number of parts.
CertificationResult certify_radical_ci(const Clutter& h, int d, const PmDecomposition& decomposition);

}  // namespace lss
