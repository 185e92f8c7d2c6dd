#include "lss/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace lss {

namespace {

struct Term {
  Monomial m;
  Integer c;
};

// Terms sorted strictly descending under the active order.
using IPoly = std::vector<Term>;

// Integer polynomial p with f = factor * p and p primitive with positive lead.
IPoly to_ipoly(const Polynomial& f, const MonomialOrder& order, Rational* factor = nullptr) {
  IPoly p;
  if (f.is_zero()) {
    if (factor) *factor = 1;
    return p;
  }
  Integer l = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  p.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    p.push_back({m, std::move(v)});
  }
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
  if (p.front().c < 0) g = -g;
  for (auto& t : p) t.c /= g;
  if (factor) *factor = Rational(g) / Rational(l);
  return p;
}

// Divides out the content of a and b jointly; returns the divisor.
Integer strip_content(IPoly& a, IPoly& b, std::size_t a_start) {
  Integer g = 0;
  auto scan = [&](const IPoly& p, std::size_t start) {
    for (std::size_t k = start; k < p.size(); ++k) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[k].c.get_mpz_t());
      if (g == 1) return false;
    }
    return true;
  };
  if (!scan(b, 0) || !scan(a, a_start) || g == 0 || g == 1) return 1;
  for (std::size_t k = a_start; k < a.size(); ++k) mpz_divexact(a[k].c.get_mpz_t(), a[k].c.get_mpz_t(), g.get_mpz_t());
  for (auto& t : b) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return g;
}

// a * f[fs..] - b * shift * g[gs..]
IPoly combine(const IPoly& f, std::size_t fs, const Integer& a, const IPoly& g, std::size_t gs, const Integer& b,
              const Monomial& shift, const MonomialOrder& order) {
  IPoly out;
  out.reserve(f.size() - fs + g.size() - gs);
  std::size_t i = fs, j = gs;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].m * shift;
      have_gm = true;
    }
    int cmp;
    if (i >= f.size()) {
      cmp = -1;
    } else if (j >= g.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(f[i].m, gm);
    }
    if (cmp > 0) {
      out.push_back({f[i].m, a == 1 ? f[i].c : Integer(a * f[i].c)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({gm, -b * g[j].c});
      ++j;
      have_gm = false;
    } else {
      Integer c = a * f[i].c - b * g[j].c;
      if (c != 0) out.push_back({gm, std::move(c)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

int find_divisor(const Monomial& m, const std::vector<const IPoly*>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if ((*basis[k])[0].m.divides(m)) return static_cast<int>(k);
  }
  return -1;
}

// Full reduction. On return, scale * f_in is congruent to the result modulo
// the basis ideal.
IPoly reduce(IPoly f, const std::vector<const IPoly*>& basis, const MonomialOrder& order, Rational* scale = nullptr) {
  IPoly r;
  Rational s = 1;
  std::size_t head = 0;
  while (head < f.size()) {
    const int k = find_divisor(f[head].m, basis);
    if (k < 0) {
      r.push_back(std::move(f[head]));
      ++head;
      continue;
    }
    const IPoly& g = *basis[k];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f[head].c.get_mpz_t(), g[0].c.get_mpz_t());
    Integer a = g[0].c / gcd;
    Integer b = f[head].c / gcd;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    const Monomial shift = g[0].m.quotient_of(f[head].m);
    f = combine(f, head + 1, a, g, 1, b, shift, order);
    head = 0;
    if (a != 1) {
      for (auto& t : r) t.c *= a;
      s *= a;
    }
    const Integer c = strip_content(f, r, 0);
    if (c != 1) s /= c;
  }
  if (!r.empty()) {
    IPoly empty;
    Integer c = strip_content(empty, r, 0);
    if (c != 1) s /= c;
    if (r.front().c < 0) {
      for (auto& t : r) t.c = -t.c;
      s = -s;
    }
  }
  if (scale) *scale = s;
  return r;
}

Polynomial to_polynomial(const IPoly& p, const SpacePtr& space, const Rational& factor) {
  Polynomial out(space);
  for (const auto& t : p) out.add_term(t.m, Rational(t.c) * factor);
  return out;
}

class Engine {
 public:
  Engine(const MonomialOrder& order, PairBudget budget) : order_(order), budget_(budget) {}

  // Returns false when the ideal turned out to be the unit ideal.
  bool run(const std::vector<Polynomial>& generators) {
    for (const auto& f : generators) {
      IPoly p = reduce(to_ipoly(f, order_), basis_view(), order_);
      if (p.empty()) continue;
      if (p[0].m.is_one()) return false;
      insert(std::move(p));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.lcm.degree() < b.lcm.degree() || (a.lcm.degree() == b.lcm.degree() && a.serial < b.serial)) best = k;
      }
      const Pair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (budget_ && ++reductions_ > *budget_) {
        throw BudgetExhausted("Groebner basis computation exceeded " + std::to_string(*budget_) + " pair reductions");
      }
      IPoly h = reduce(s_pair(pair), basis_view(), order_);
      if (h.empty()) continue;
      if (h[0].m.is_one()) return false;
      insert(std::move(h));
    }
    return true;
  }

  // Reduced basis with primitive integer coefficients.
  std::vector<IPoly> reduced_basis() const {
    std::vector<int> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!in_basis_[k]) continue;
      bool redundant = false;
      for (std::size_t o = 0; o < polys_.size() && !redundant; ++o) {
        if (o == k || !in_basis_[o]) continue;
        const Monomial& lo = polys_[o][0].m;
        const Monomial& lk = polys_[k][0].m;
        redundant = lo.divides(lk) && (lo != lk || o < k);
      }
      if (!redundant) idx.push_back(static_cast<int>(k));
    }
    std::vector<IPoly> out;
    for (int k : idx) {
      std::vector<const IPoly*> others;
      for (int o : idx) {
        if (o != k) others.push_back(&polys_[o]);
      }
      IPoly tail(polys_[k].begin() + 1, polys_[k].end());
      Rational scale;
      IPoly reduced = reduce(std::move(tail), others, order_, &scale);
      // reduced is scale * tail modulo the others, so the lead is scaled alike.
      Rational lead = Rational(polys_[k][0].c) * scale;
      Integer l = lead.get_den();
      IPoly full;
      full.push_back({polys_[k][0].m, lead.get_num()});
      for (auto& t : reduced) full.push_back({t.m, t.c * l});
      IPoly empty;
      strip_content(empty, full, 0);
      if (full[0].c < 0) {
        for (auto& t : full) t.c = -t.c;
      }
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) { return order_.compare(a[0].m, b[0].m) < 0; });
    return out;
  }

 private:
  struct Pair {
    int i;
    int j;
    Monomial lcm;
    std::size_t serial;
  };

  std::vector<const IPoly*> basis_view() const {
    std::vector<const IPoly*> v;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (in_basis_[k]) v.push_back(&polys_[k]);
    }
    return v;
  }

  IPoly s_pair(const Pair& p) const {
    const IPoly& f = polys_[p.i];
    const IPoly& g = polys_[p.j];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f[0].c.get_mpz_t(), g[0].c.get_mpz_t());
    const Integer a = g[0].c / gcd;
    const Integer b = f[0].c / gcd;
    const Monomial sf = f[0].m.quotient_of(p.lcm);
    const Monomial sg = g[0].m.quotient_of(p.lcm);
    IPoly fs;
    fs.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].m * sf, f[k].c});
    IPoly s = combine(fs, 0, a, g, 1, b, sg, order_);
    IPoly empty;
    strip_content(empty, s, 0);
    if (!s.empty() && s[0].c < 0) {
      for (auto& t : s) t.c = -t.c;
    }
    return s;
  }

  void insert(IPoly h) {
    const int hi = static_cast<int>(polys_.size());
    polys_.push_back(std::move(h));
    in_basis_.push_back(0);
    const Monomial& lh = polys_[hi][0].m;

    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!in_basis_[g]) continue;
      const Monomial& lg = polys_[g][0].m;
      c.push_back({static_cast<int>(g), lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t o = k + 1; o < c.size() && keep; ++o) keep = !c[o].lcm.divides(c[k].lcm);
        for (std::size_t o = 0; o < d.size() && keep; ++o) keep = !d[o].lcm.divides(c[k].lcm);
      }
      if (keep) d.push_back(c[k]);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = polys_[p.i][0].m.lcm(lh);
      const Monomial lj = polys_[p.j][0].m.lcm(lh);
      return li != p.lcm && lj != p.lcm;
    });
    for (const auto& cand : d) {
      if (!cand.coprime) pairs_.push_back({cand.g, hi, cand.lcm, serial_++});
    }
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (in_basis_[g] && lh.divides(polys_[g][0].m)) in_basis_[g] = 0;
    }
    in_basis_[hi] = 1;
  }

  const MonomialOrder& order_;
  PairBudget budget_;
  std::size_t reductions_ = 0;
  std::size_t serial_ = 0;
  std::vector<IPoly> polys_;
  std::vector<char> in_basis_;
  std::vector<Pair> pairs_;
};

std::vector<const IPoly*> view(const std::vector<IPoly>& v) {
  std::vector<const IPoly*> out;
  for (const auto& p : v) out.push_back(&p);
  return out;
}

int min_hitting_set(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto s : sets) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](auto m) { return (m & ~s) == 0; })) minimal.push_back(s);
  }
  int best = 0;
  {
    // Greedy cover is an upper bound; refine by search.
    std::uint64_t greedy = 0;
    int count = 0;
    for (;;) {
      std::vector<int> freq(64, 0);
      bool open = false;
      for (auto s : minimal) {
        if (s & greedy) continue;
        open = true;
        for (auto b = s; b; b &= b - 1) ++freq[std::countr_zero(b)];
      }
      if (!open) break;
      const int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
      greedy |= std::uint64_t{1} << v;
      ++count;
    }
    best = count;
  }
  std::function<void(std::uint64_t, int)> search = [&](std::uint64_t chosen, int count) {
    // Pick the unhit set with fewest elements; disjoint unhit sets give a lower bound.
    const std::uint64_t* pick = nullptr;
    std::uint64_t used = 0;
    int bound = 0;
    for (const auto& s : minimal) {
      if (s & chosen) continue;
      if (!pick || std::popcount(s) < std::popcount(*pick)) pick = &s;
      if (!(s & used)) {
        used |= s;
        ++bound;
      }
    }
    if (!pick) {
      best = std::min(best, count);
      return;
    }
    if (count + bound >= best) return;
    for (auto b = *pick; b; b &= b - 1) search(chosen | (b & -b), count + 1);
  };
  search(0, 0);
  return best;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].term_count() == 1 && basis[0].degree() == 0;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis) out.push_back(leading_monomial(g, order));
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const SpacePtr& space, const MonomialOrder& order,
                         PairBudget budget) {
  GroebnerBasis gb;
  gb.order = order;
  gb.space = space;
  if (space && order.variables() != space->size()) {
    throw std::invalid_argument("order and variable space disagree on the number of variables");
  }
  Engine engine(gb.order, budget);
  if (!engine.run(generators)) {
    gb.basis.push_back(Polynomial(space, 1));
    return gb;
  }
  for (const IPoly& p : engine.reduced_basis()) {
    gb.basis.push_back(to_polynomial(p, space, Rational(1) / Rational(p[0].c)));
  }
  return gb;
}

GroebnerBasis buchberger(const GeneratorSet& gens, const MonomialOrder& order, PairBudget budget) {
  return buchberger(gens.generators, gens.space, order, budget);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<IPoly> basis;
  for (const auto& g : gb.basis) basis.push_back(to_ipoly(g, gb.order));
  Rational factor;
  IPoly p = to_ipoly(f, gb.order, &factor);
  if (p.empty()) return Polynomial(f.space() ? f.space() : gb.space);
  Rational scale;
  IPoly r = reduce(std::move(p), view(basis), gb.order, &scale);
  return to_polynomial(r, f.space() ? f.space() : gb.space, factor / scale);
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Monomial lf = leading_monomial(f, order);
  const Monomial lg = leading_monomial(g, order);
  const Monomial l = lf.lcm(lg);
  Polynomial a = f.times(lf.quotient_of(l)) * (1 / f.coefficient(lf));
  Polynomial b = g.times(lg.quotient_of(l)) * (1 / g.coefficient(lg));
  return a - b;
}

GeneratorSet eliminate(const GeneratorSet& gens, std::uint64_t dropped, PairBudget budget) {
  GeneratorSet out;
  out.space = gens.space;
  out.provenance = "elimination of " + gens.provenance;
  if (gens.generators.empty()) return out;
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(gens.space->size(), dropped), budget);
  for (const auto& g : gb.basis) {
    if ((g.support() & dropped) == 0) out.generators.push_back(g);
  }
  return out;
}

Polynomial divide_exactly(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero");
  const SpacePtr space = f.space() ? f.space() : g.space();
  const int nvars = space ? space->size() : kMaxVariables;
  const MonomialOrder order = MonomialOrder::degrevlex(nvars);
  const Monomial lg = leading_monomial(g, order);
  const Rational cg = g.coefficient(lg);
  Polynomial q(space), r = f;
  while (!r.is_zero()) {
    const Monomial lr = leading_monomial(r, order);
    if (!lg.divides(lr)) throw std::invalid_argument("divisor does not divide the polynomial");
    const Polynomial t = Polynomial::term(space, lg.quotient_of(lr), r.coefficient(lr) / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

GeneratorSet colon(const GeneratorSet& j, const Polynomial& g, PairBudget budget) {
  if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  GeneratorSet out;
  out.space = j.space;
  out.provenance = "(" + j.provenance + ") : g";
  if (j.generators.empty()) return out;
  if (g.degree() == 0) {
    out.generators = j.generators;
    return out;
  }
  const int n = j.space->size();
  std::string aux = "t";
  while (j.space->index_of(aux)) aux += "_";
  auto ext = std::make_shared<const VariableSpace>(j.space->with_auxiliary(aux));
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  const Polynomial t = Polynomial::variable(ext, n);
  GeneratorSet lifted;
  lifted.space = ext;
  lifted.provenance = "t J + (1 - t) g";
  for (const auto& f : j.generators) {
    if (!f.is_zero()) lifted.generators.push_back(t * f.remapped(ext, up));
  }
  lifted.generators.push_back((Polynomial(ext, 1) - t) * g.remapped(ext, up));
  const GeneratorSet meet = eliminate(lifted, std::uint64_t{1} << n, budget);
  std::vector<int> down(n + 1, -1);
  for (int i = 0; i < n; ++i) down[i] = i;
  for (const auto& h : meet.generators) out.generators.push_back(divide_exactly(h.remapped(j.space, down), g));
  return out;
}

int quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const int n = gb.space ? gb.space->size() : gb.order.variables();
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  if (supports.empty()) return n;
  return n - min_hitting_set(std::move(supports));
}

int quotient_dimension(const GeneratorSet& gens, const MonomialOrder& order, PairBudget budget) {
  return quotient_dimension(buchberger(gens, order, budget));
}

int codimension(const GeneratorSet& gens, PairBudget budget) {
  const int n = gens.space->size();
  return n - quotient_dimension(gens, MonomialOrder::degrevlex(n), budget);
}

bool is_complete_intersection_gb(const GeneratorSet& gens, PairBudget budget) {
  const auto k = std::count_if(gens.generators.begin(), gens.generators.end(), [](const Polynomial& f) { return !f.is_zero(); });
  const int n = gens.space->size();
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex(n), budget);
  if (gb.is_unit()) return false;
  return n - quotient_dimension(gb) == k;
}

}  // namespace lss
