#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lss/graph.hpp"
#include "lss/posmatch.hpp"
#include "lss/witness.hpp"

namespace lss {

enum class Verdict { True, False, Unknown };
enum class Property { Radical, CompleteIntersection, Prime };
enum class FieldAssumption { Char0, Char2, CharOdd, Unspecified };

std::string to_string(Verdict v);
std::string to_string(Property p);
std::string to_string(FieldAssumption f);
/// Accepts "radical", "ci", "prime". Throws ParseError otherwise.
Property parse_property(std::string_view text);
/// Accepts "0", "2", "p" (odd prime) and "any". Throws ParseError otherwise.
FieldAssumption parse_field(std::string_view text);

struct Justification {
  std::string rule;
  std::string cite;
  std::string evidence;
};

struct Classification {
  Property property = Property::Radical;
  int d = 1;
  Verdict verdict = Verdict::Unknown;
  std::vector<Justification> justifications;
};

/// Largest w with C(w, 2) <= n. Throws std::invalid_argument for n < 1.
int w_of(int n);

/// Evaluates the decision rules for one graph under one field assumption.
/// Graph invariants and pmd are computed once; verdicts for all d up to the
/// horizon are derived together and closed under persistence.
class Classifier {
 public:
  explicit Classifier(Graph g, FieldAssumption field = FieldAssumption::Unspecified,
                      std::size_t pmd_budget = kDefaultPmdNodeBudget);

  /// Throws std::invalid_argument for d < 1 and ConsistencyError when the
  /// rules contradict each other.
  Classification classify(int d, Property p);

  /// Records a certified non-radicality witness for L_G(d). Only used when
  /// the field has characteristic 0, since the witness is computed over Q.
  /// Throws std::invalid_argument when the report has no separating element.
  void import_witness(int d, const WitnessReport& report);

  const Graph& graph() const { return g_; }
  FieldAssumption field() const { return field_; }
  const PmdResult& pmd() const { return pmd_; }
  /// Largest d for which some rule derives FALSE (0 when none does), scanning
  /// up to the horizon.
  int largest_false(Property p);
  /// Smallest d from which the rules derive TRUE for every larger d.
  int stable_true_from(Property p) const;

 private:
  struct Cell {
    Verdict verdict = Verdict::Unknown;
    std::vector<Justification> why;
  };
  using Table = std::vector<Cell>;  // index d, entry 0 unused

  void extend(int horizon);
  void base_rules(int d);
  void closure();
  bool set(Property p, int d, Verdict v, Justification j);
  Cell& cell(Property p, int d);
  bool char0() const { return field_ == FieldAssumption::Char0; }

  Graph g_;
  FieldAssumption field_;
  PmdResult pmd_;
  int pmd_value_ = 0;
  int delta_ = 0;
  int omega_ = 0;
  bool forest_ = false;
  bool matching_ = false;
  bool bipartite_ = false;
  bool even_cycle_ = false;
  bool claw_ = false;
  bool square_ = false;
  /// Largest a+b over contained K_{a,b}, with the witnessing sides.
  int kab_sum_ = 0;
  std::pair<int, int> kab_sides_{0, 0};
  /// Largest k with B_k contained (B_1 is two non-adjacent vertices).
  int crown_ = 0;
  std::optional<Bipartition> kmn_;
  std::map<int, WitnessReport> witnesses_;
  int horizon_ = 0;
  Table radical_, ci_, prime_;
};

Classification classify(const Graph& g, int d, Property p, FieldAssumption f = FieldAssumption::Unspecified,
                        std::size_t pmd_budget = kDefaultPmdNodeBudget);

struct AsymBounds {
  Property property = Property::Prime;
  /// asym lies in [lower, upper].
  int lower = 1;
  int upper = 1;
  bool upper_exact = false;
  std::vector<std::string> notes;
};

/// Bounds on the least d from which L_G(d') has the property for all d' >= d.
/// Only ci and prime are meaningful; radical throws std::invalid_argument.
AsymBounds asym_bounds(const Graph& g, Property p, FieldAssumption f = FieldAssumption::Unspecified,
                       std::size_t pmd_budget = kDefaultPmdNodeBudget);

struct TransferReport {
  bool applicable = false;
  std::vector<std::string> statements;
};

/// Consequences for coordinate sections of determinantal and Pfaffian ideals
/// of the verdicts on L_G(d). Needs characteristic 0.
TransferReport transfer_report(const Graph& g, int d, FieldAssumption f,
                               std::size_t pmd_budget = kDefaultPmdNodeBudget);

}  // namespace lss
