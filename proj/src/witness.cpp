#include "lss/witness.hpp"

#include <chrono>
#include <stdexcept>

namespace lss {

WitnessReport witness_test(const GeneratorSet& j, const Polynomial& g, PairBudget budget) {
  if (g.is_zero()) throw std::invalid_argument("witness candidate is zero");
  const auto start = std::chrono::steady_clock::now();
  WitnessReport report;
  report.provenance = j.provenance;
  report.g = g;
  report.colon_g = colon(j, g, budget);
  report.colon_g2 = colon(report.colon_g, g, budget);
  const int n = j.space->size();
  const MonomialOrder order = MonomialOrder::degrevlex(n);
  const GroebnerBasis first = buchberger(report.colon_g, order, budget);
  for (const auto& h : report.colon_g2.generators) {
    if (!ideal_contains(first, h)) {
      report.separating = h;
      break;
    }
  }
  if (report.separating) {
    const GroebnerBasis base = buchberger(j, order, budget);
    const Polynomial hg = *report.separating * g;
    if (!ideal_contains(base, hg * g) || ideal_contains(base, hg)) {
      throw std::logic_error("witness re-check against the original ideal failed");
    }
    report.verdict = true;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

WitnessSearch search_witness(const GeneratorSet& j, const GeneratorSet& pool, PairBudget per_candidate) {
  WitnessSearch search;
  for (const auto& g : pool.generators) {
    if (g.is_zero()) continue;
    ++search.tried;
    try {
      WitnessReport r = witness_test(j, g, per_candidate);
      if (r.verdict) {
        search.found = std::move(r);
        return search;
      }
    } catch (const BudgetExhausted&) {
      ++search.inconclusive;
    }
  }
  return search;
}

CertificationResult certify_radical_ci(const Clutter& h, int d, const PmDecomposition& decomposition) {
  if (d < static_cast<int>(decomposition.size())) {
    throw std::invalid_argument("d = " + std::to_string(d) + " is smaller than the number of parts");
  }
  if (auto check = verify_pm_decomposition(h, decomposition); !check) {
    return {std::nullopt, "invalid decomposition: " + check.diagnostic};
  }
  const GeneratorSet gens = lss_generators(h, d);
  const VariableSpace& space = *gens.space;
  RadicalCiCertificate cert;
  cert.decomposition = decomposition;
  cert.order = order_from_decomposition(space, decomposition);
  std::vector<int> part_of(h.edge_count(), -1);
  for (std::size_t l = 0; l < decomposition.size(); ++l) {
    for (std::size_t e : decomposition.parts[l]) part_of[e] = static_cast<int>(l);
  }
  std::uint64_t seen = 0;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const Monomial lead = leading_monomial(gens.generators[e], cert.order);
    Monomial expected;
    for (Vertex i : h.edge(e)) expected.set(space.at(i, part_of[e] + 1), 1);
    const std::string label = "edge " + std::to_string(e);
    if (lead != expected) {
      return {std::nullopt, label + ": initial monomial " + monomial_to_string(lead, space) + ", expected " +
                                monomial_to_string(expected, space)};
    }
    if (!lead.is_squarefree()) return {std::nullopt, label + ": initial monomial is not squarefree"};
    if (lead.support() & seen) return {std::nullopt, label + ": initial monomial shares a variable with an earlier one"};
    seen |= lead.support();
    cert.initial_monomials.push_back(lead);
  }
  return {std::move(cert), {}};
}

}  // namespace lss
