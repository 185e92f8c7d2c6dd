#include "lss/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "lss/errors.hpp"
#include "lss/ideal_forge.hpp"

namespace lss {

namespace {

std::string num(long long v) { return std::to_string(v); }

long long choose2(long long w) { return w < 2 ? 0 : w * (w - 1) / 2; }

std::string kab(int a, int b) { return "K_{" + num(a) + "," + num(b) + "}"; }

Verdict opposite(Verdict v) { return v == Verdict::True ? Verdict::False : Verdict::True; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Radical: return "radical";
    case Property::CompleteIntersection: return "ci";
    case Property::Prime: return "prime";
  }
  return "radical";
}

std::string to_string(FieldAssumption f) {
  switch (f) {
    case FieldAssumption::Char0: return "char 0";
    case FieldAssumption::Char2: return "char 2";
    case FieldAssumption::CharOdd: return "char p > 2";
    case FieldAssumption::Unspecified: return "unspecified characteristic";
  }
  return "unspecified characteristic";
}

Property parse_property(std::string_view text) {
  if (text == "radical") return Property::Radical;
  if (text == "ci") return Property::CompleteIntersection;
  if (text == "prime") return Property::Prime;
  throw ParseError("unknown property '" + std::string(text) + "' (expected radical, ci or prime)");
}

FieldAssumption parse_field(std::string_view text) {
  if (text == "0") return FieldAssumption::Char0;
  if (text == "2") return FieldAssumption::Char2;
  if (text == "p") return FieldAssumption::CharOdd;
  if (text == "any") return FieldAssumption::Unspecified;
  throw ParseError("unknown characteristic '" + std::string(text) + "' (expected 0, 2, p or any)");
}

int w_of(int n) {
  if (n < 1) throw std::invalid_argument("w_n needs n >= 1");
  long long w = 2;
  while (choose2(w + 1) <= n) ++w;
  return static_cast<int>(w);
}

Classifier::Classifier(Graph g, FieldAssumption field, std::size_t pmd_budget)
    : g_(std::move(g)), field_(field) {
  const Clutter h(g_);
  pmd_ = exact_pmd(h, pmd_budget);
  pmd_value_ = pmd_.upper;
  delta_ = max_degree(g_);
  omega_ = clique_number(g_);
  forest_ = is_forest(g_);
  matching_ = is_matching(g_);
  bipartite_ = bipartition(g_).has_value();
  even_cycle_ = has_even_cycle(g_);
  claw_ = contains_complete_bipartite(g_, 1, 3);
  square_ = contains_complete_bipartite(g_, 2, 2);
  const int n = g_.vertex_count();
  for (int s = n; s >= 2 && kab_sum_ == 0; --s) {
    for (int a = 1; a <= s / 2; ++a) {
      if (contains_complete_bipartite(g_, a, s - a)) {
        kab_sum_ = s;
        kab_sides_ = {a, s - a};
        break;
      }
    }
  }
  for (int k = 4; 2 * k <= n && contains_crown(g_, k); ++k) crown_ = k;
  if (g_.edge_count() > 0) kmn_ = complete_bipartite_sides(g_);
}

Classifier::Cell& Classifier::cell(Property p, int d) {
  switch (p) {
    case Property::Radical: return radical_[d];
    case Property::CompleteIntersection: return ci_[d];
    case Property::Prime: return prime_[d];
  }
  return prime_[d];
}

bool Classifier::set(Property p, int d, Verdict v, Justification j) {
  Cell& c = cell(p, d);
  if (c.verdict == Verdict::Unknown) {
    c.verdict = v;
    c.why.push_back(std::move(j));
    return true;
  }
  if (c.verdict == v) {
    if (j.rule != "persistence" &&
        std::none_of(c.why.begin(), c.why.end(), [&](const Justification& x) { return x.rule == j.rule; })) {
      c.why.push_back(std::move(j));
    }
    return false;
  }
  std::string msg = "contradiction for " + to_string(p) + " at d=" + num(d) + " on " + to_string(g_) + ": " +
                    to_string(c.verdict) + " by " + c.why.front().rule + " (" + c.why.front().evidence + "), " +
                    to_string(opposite(c.verdict)) + " by " + j.rule + " (" + j.evidence + ")";
  throw ConsistencyError(msg);
}

void Classifier::base_rules(int d) {
  const auto T = Verdict::True;
  const auto F = Verdict::False;
  const auto Rad = Property::Radical;
  const auto Ci = Property::CompleteIntersection;
  const auto Pr = Property::Prime;
  const std::string at = "d=" + num(d);

  if (d == 1) {
    set(Rad, d, T, {"edge-ideal", "L_G(1) is the edge ideal of G and therefore radical", at});
    set(Ci, d, matching_ ? T : F,
        {"edge-ideal", "L_G(1) is a complete intersection if and only if G is a matching",
         matching_ ? "G is a matching" : "G is not a matching"});
    const bool none = g_.edge_count() == 0;
    set(Pr, d, none ? T : F,
        {"edge-ideal", "L_G(1) is prime if and only if G has no edges", none ? "G has no edges" : "G has an edge"});
  }

  if (d == 2) {
    const std::string bip = bipartite_ ? "G is bipartite" : "G is not bipartite";
    if (field_ == FieldAssumption::Char0 || field_ == FieldAssumption::CharOdd) {
      set(Rad, d, T, {"d2-radical", "L_G(2) is radical for every graph when char k != 2", to_string(field_)});
    } else if (field_ == FieldAssumption::Char2) {
      set(Rad, d, bipartite_ ? T : F,
          {"d2-radical", "in characteristic 2, L_G(2) is radical if and only if G is bipartite", bip});
    } else if (bipartite_) {
      set(Rad, d, T, {"d2-radical", "L_G(2) is radical for bipartite G in every characteristic", bip});
    }
    set(Pr, d, matching_ ? T : F,
        {"d2-prime", "L_G(2) is prime if and only if G is a matching; this holds in arbitrary characteristic",
         matching_ ? "G is a matching" : "G is not a matching"});
    const bool ok = !claw_ && !even_cycle_;
    std::string ev = ok ? "no K_{1,3} and no even cycle" : (claw_ ? "contains K_{1,3}" : "contains an even cycle");
    set(Ci, d, ok ? T : F,
        {"d2-ci", "L_G(2) is a complete intersection if and only if G contains neither K_{1,3} nor an even cycle",
         ev});
  }

  if (d == 3) {
    const bool ok = !claw_ && !square_;
    std::string ev = ok ? "no K_{1,3} and no K_{2,2}" : (claw_ ? "contains K_{1,3}" : "contains K_{2,2}");
    set(Pr, d, ok ? T : F,
        {"d3-prime", "L_G(3) is prime if and only if G contains neither K_{1,3} nor K_{2,2}", ev});
  }

  if (forest_) {
    const std::string ev = "forest with max degree " + num(delta_) + ", " + at;
    set(Rad, d, T, {"forest", "for a forest L_G(d) is radical for all d", ev});
    set(Ci, d, d >= delta_ ? T : F,
        {"forest", "for a forest L_G(d) is a complete intersection if and only if d >= max degree", ev});
    set(Pr, d, d >= delta_ + 1 ? T : F,
        {"forest", "for a forest L_G(d) is prime if and only if d >= max degree + 1", ev});
  }

  if (kmn_) {
    const int m = static_cast<int>(kmn_->left.size());
    const int n = static_cast<int>(kmn_->right.size());
    const std::string ev = "non-isolated part is " + kab(m, n) + ", " + at;
    set(Rad, d, T, {"complete-bipartite", "for G = K_{m,n} L_G(d) is radical for all d", ev});
    set(Ci, d, d >= m + n - 1 ? T : F,
        {"complete-bipartite", "for G = K_{m,n} L_G(d) is a complete intersection if and only if d >= m+n-1", ev});
    set(Pr, d, d >= m + n ? T : F,
        {"complete-bipartite", "for G = K_{m,n} L_G(d) is prime if and only if d >= m+n", ev});
  }

  const std::string pmd_ev =
      "pmd(G) " + std::string(pmd_.exact ? "= " : "<= ") + num(pmd_value_) + (pmd_.exact ? " (exact)" : " (upper bound)");
  if (d >= pmd_value_) {
    set(Rad, d, T, {"pmd", "L_G(d) is a radical complete intersection for d >= pmd(G)", pmd_ev + ", " + at});
    set(Ci, d, T, {"pmd", "L_G(d) is a radical complete intersection for d >= pmd(G)", pmd_ev + ", " + at});
  }
  if (d >= pmd_value_ + 1) {
    set(Pr, d, T, {"pmd", "L_G(d) is prime for d >= pmd(G) + 1", pmd_ev + ", " + at});
  }

  if (kab_sum_ > d) {
    set(Pr, d, F,
        {"kab-obstruction", "if G contains K_{a,b} with a+b > d then L_G(d) is not prime",
         "contains " + kab(kab_sides_.first, kab_sides_.second) + ", a+b = " + num(kab_sum_) + " > " + num(d)});
  }
  if (kab_sum_ >= d + 2) {
    const int a = std::min(kab_sides_.first, d + 1);
    set(Ci, d, F,
        {"kab-obstruction", "if G contains K_{a,b} with a+b = d+2 then L_G(d) is not a complete intersection",
         "contains " + kab(a, d + 2 - a) + ", a+b = " + num(d + 2)});
  }

  if (char0()) {
    if (d > 3 && crown_ >= d) {
      set(Pr, d, F,
          {"crown-obstruction", "in characteristic 0, for d > 3, if G contains B_d then L_G(d) is not prime",
           "contains B_" + num(d)});
    }
    if (d > 2 && crown_ >= d + 1) {
      set(Ci, d, F,
          {"crown-obstruction",
           "in characteristic 0, for d > 2, if G contains B_{d+1} then L_G(d) is not a complete intersection",
           "contains B_" + num(d + 1)});
    }
    if (omega_ >= 1) {
      const long long prime_bound = omega_ + choose2(w_of(omega_) - 2) - 1;
      const long long ci_bound = omega_ + choose2(w_of(omega_ + 1) - 2) - 2;
      const std::string ev = "clique number " + num(omega_);
      if (d <= prime_bound) {
        set(Pr, d, F,
            {"clique-obstruction",
             "in characteristic 0, with a = clique number, L_G(d) is not prime for d <= a + C(w_a - 2, 2) - 1",
             ev + ", bound " + num(prime_bound)});
      }
      if (d <= ci_bound) {
        set(Ci, d, F,
            {"clique-obstruction",
             "in characteristic 0, with a = clique number, L_G(d) is not a complete intersection for "
             "d <= a + C(w_{a+1} - 2, 2) - 2",
             ev + ", bound " + num(ci_bound)});
      }
    }
    if (auto it = witnesses_.find(d); it != witnesses_.end()) {
      set(Rad, d, F,
          {"witness", "J : g differs from J : g^2, so J is not radical",
           "g = " + to_string(it->second.g) + ", separating element " + to_string(*it->second.separating)});
    }
  }
}

void Classifier::closure() {
  const auto T = Verdict::True;
  const auto F = Verdict::False;
  const auto Ci = Property::CompleteIntersection;
  const auto Pr = Property::Prime;
  auto from = [](Property p, int d, Verdict v) {
    return Justification{"persistence",
                         "prime implies complete intersection, and a complete intersection at d is prime at d+1",
                         to_string(p) + " " + to_string(v) + " at d=" + num(d)};
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 1; d <= horizon_; ++d) {
      if (prime_[d].verdict == T) {
        changed |= set(Ci, d, T, from(Pr, d, T));
        if (d < horizon_) changed |= set(Pr, d + 1, T, from(Pr, d, T));
      }
      if (ci_[d].verdict == T && d < horizon_) {
        changed |= set(Pr, d + 1, T, from(Ci, d, T));
        changed |= set(Ci, d + 1, T, from(Ci, d, T));
      }
      if (ci_[d].verdict == F) {
        changed |= set(Pr, d, F, from(Ci, d, F));
        if (d > 1) changed |= set(Ci, d - 1, F, from(Ci, d, F));
      }
      if (prime_[d].verdict == F && d > 1) {
        changed |= set(Pr, d - 1, F, from(Pr, d, F));
        changed |= set(Ci, d - 1, F, from(Pr, d, F));
      }
    }
  }
}

void Classifier::extend(int horizon) {
  if (horizon <= horizon_) return;
  horizon_ = horizon;
  radical_.assign(horizon_ + 1, {});
  ci_.assign(horizon_ + 1, {});
  prime_.assign(horizon_ + 1, {});
  for (int d = 1; d <= horizon_; ++d) base_rules(d);
  closure();
}

Classification Classifier::classify(int d, Property p) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  int horizon = std::max({d, pmd_value_ + 1, kab_sum_, crown_ + 1, 3});
  if (char0() && omega_ >= 1) horizon = std::max(horizon, omega_ + static_cast<int>(choose2(w_of(omega_ + 1))));
  extend(horizon);
  const Cell& c = cell(p, d);
  return {p, d, c.verdict, c.why};
}

void Classifier::import_witness(int d, const WitnessReport& report) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (!report.verdict || !report.separating) throw std::invalid_argument("witness report does not certify anything");
  witnesses_.insert_or_assign(d, report);
  const int h = horizon_;
  horizon_ = 0;
  extend(std::max(h, d));
}

int Classifier::largest_false(Property p) {
  classify(1, p);
  for (int d = horizon_; d >= 1; --d) {
    if (cell(p, d).verdict == Verdict::False) return d;
  }
  return 0;
}

int Classifier::stable_true_from(Property p) const {
  int d = horizon_;
  const Table& t = p == Property::Prime ? prime_ : (p == Property::CompleteIntersection ? ci_ : radical_);
  while (d >= 1 && t[d].verdict == Verdict::True) --d;
  return d + 1;
}

Classification classify(const Graph& g, int d, Property p, FieldAssumption f, std::size_t pmd_budget) {
  Classifier c(g, f, pmd_budget);
  return c.classify(d, p);
}

AsymBounds asym_bounds(const Graph& g, Property p, FieldAssumption f, std::size_t pmd_budget) {
  if (p == Property::Radical) throw std::invalid_argument("asym bounds are defined for ci and prime only");
  Classifier c(g, f, pmd_budget);
  AsymBounds b;
  b.property = p;
  b.lower = c.largest_false(p) + 1;
  b.upper = c.stable_true_from(p);
  b.upper_exact = c.pmd().exact;
  const int pmd_term = c.pmd().upper + (p == Property::Prime ? 1 : 0);
  b.notes.push_back("pmd(G) " + std::string(c.pmd().exact ? "= " : "<= ") + num(c.pmd().upper) + " gives asym <= " +
                    num(std::max(pmd_term, 1)));
  if (b.lower > 1) b.notes.push_back("FALSE at d=" + num(b.lower - 1));
  if (f == FieldAssumption::Char0) {
    if (auto kn = complete_graph_vertices(g)) {
      const int n = static_cast<int>(kn->size());
      const long long bound = p == Property::Prime ? n + choose2(w_of(n) - 2) - 1 : n + choose2(w_of(n + 1) - 2) - 2;
      b.lower = std::max<long long>(b.lower, bound + 1);
      b.notes.push_back("K_" + num(n) + " is not " + to_string(p) + " at d=" + num(bound));
    }
  }
  return b;
}

TransferReport transfer_report(const Graph& g, int d, FieldAssumption f, std::size_t pmd_budget) {
  TransferReport r;
  if (f != FieldAssumption::Char0) {
    r.statements.push_back("transfer propositions assume characteristic 0");
    return r;
  }
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  r.applicable = true;
  Classifier c(g, f, pmd_budget);
  const int n = g.vertex_count();
  const auto sides = bipartition(g);
  const int t = d + 1;

  auto phrase = [](Property p, const std::string& ideal, long long height) {
    switch (p) {
      case Property::Radical: return ideal + " is radical";
      case Property::CompleteIntersection: return ideal + " has maximal height " + num(height);
      case Property::Prime: return ideal + " is prime";
    }
    return ideal;
  };

  for (Property p : {Property::Radical, Property::CompleteIntersection, Property::Prime}) {
    if (c.classify(d, p).verdict != Verdict::True) continue;
    const std::string because = " (L_G(" + num(d) + ") is " + to_string(p) + ")";
    if (t <= n) {
      const std::string ideal = "I_" + num(t) + "(X_G^sym)";
      r.statements.push_back(phrase(p, ideal, expected_height(HeightKind::Symmetric, n, n, t)) + because);
    }
    if (sides) {
      const int m = static_cast<int>(sides->left.size());
      const int k = static_cast<int>(sides->right.size());
      if (t <= std::min(m, k)) {
        const std::string ideal = "I_" + num(t) + "(X_G^gen) of size " + num(m) + "x" + num(k);
        r.statements.push_back(phrase(p, ideal, expected_height(HeightKind::Generic, m, k, t)) + because);
      }
    }
  }
  // Twisted ideals of bipartite graphs are L_G(2d) after a change of coordinates.
  if (sides && 2 * d + 2 <= n) {
    for (Property p : {Property::Radical, Property::CompleteIntersection, Property::Prime}) {
      if (c.classify(2 * d, p).verdict != Verdict::True) continue;
      const std::string ideal = "Pf_" + num(2 * d + 2) + "(X_G^skew)";
      r.statements.push_back(phrase(p, ideal, expected_height(HeightKind::Pfaffian, n, n, 2 * d + 2)) +
                             " (twisted ideal of the bipartite graph G equals L_G(" + num(2 * d) + ") up to coordinates)");
    }
  }

  r.statements.push_back("I_2(X_G^sym) and I_3(X_G^sym) are radical");
  if (sides) r.statements.push_back("I_2(X_G^gen) and I_3(X_G^gen) are radical");
  r.statements.push_back("Pf_4(X_G^skew) is radical");
  if (is_forest(g)) {
    const int delta = max_degree(g);
    r.statements.push_back("G is a forest: I_k(X_G^gen), I_k(X_G^sym) and Pf_2k(X_G^skew) are radical for all k");
    r.statements.push_back("G is a forest: I_k(X_G^gen) and I_k(X_G^sym) have maximal height for k >= " +
                           num(delta + 1));
    r.statements.push_back("G is a forest: I_k(X_G^gen) and I_k(X_G^sym) are prime for k >= " + num(delta + 2));
  }
  return r;
}

}  // namespace lss
