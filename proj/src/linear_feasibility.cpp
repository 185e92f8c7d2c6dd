#include "lss/linear_feasibility.hpp"

#include <algorithm>
#include <bitset>
#include <climits>
#include <map>
#include <numeric>

namespace lss {

void LinearSystem::add(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != variables) {
    throw std::invalid_argument("constraint width does not match the variable count");
  }
  rows.push_back({std::move(coeffs), sense, std::move(rhs)});
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != system.variables) return false;
  for (const auto& row : system.rows) {
    Rational lhs = 0;
    for (int j = 0; j < system.variables; ++j) lhs += row.coeffs[j] * point[j];
    if (row.sense == Sense::AtLeast ? lhs < row.rhs : lhs > row.rhs) return false;
  }
  return true;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long gcd_of(long long a, long long b) {
  if (a == LLONG_MIN || b == LLONG_MIN) throw Overflow{};
  return std::gcd(a, b);
}
int sign_of(long long a) { return (a > 0) - (a < 0); }
Rational as_rational(long long a) { return Rational(Integer(static_cast<long>(a))); }

Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
Integer checked_add(const Integer& a, const Integer& b) { return a + b; }
Integer gcd_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
int sign_of(const Integer& a) { return sgn(a); }
Rational as_rational(const Integer& a) { return Rational(a); }

constexpr std::size_t kHistoryBits = 128;

// Row meaning a . x >= b.
template <class T>
struct Row {
  std::vector<T> a;
  T b{};
  std::bitset<kHistoryBits> history;
};

template <class T>
void normalize(Row<T>& row) {
  T g = 0;
  for (const T& c : row.a) g = gcd_of(g, c);
  g = gcd_of(g, row.b);
  if (g == 0 || g == 1) return;
  for (T& c : row.a) c /= g;
  row.b /= g;
}

template <class T>
bool all_zero(const std::vector<T>& a) {
  return std::all_of(a.begin(), a.end(), [](const T& c) { return c == 0; });
}

// Among rows with proportional coefficient vectors, drops a row when another is
// at least as tight and its history is a subset.
template <class T>
std::vector<Row<T>> dedupe(std::vector<Row<T>> rows) {
  struct Kept {
    std::size_t index;
    T scale;
  };
  std::map<std::vector<T>, std::vector<Kept>> seen;
  std::vector<Row<T>> out;
  std::vector<bool> dropped;
  auto subset = [](const auto& a, const auto& b) { return (a & ~b).none(); };
  for (auto& row : rows) {
    T g = 0;
    for (const T& c : row.a) g = gcd_of(g, c);
    std::vector<T> key = row.a;
    for (T& c : key) c /= g;
    auto& group = seen[std::move(key)];
    bool redundant = false;
    for (const Kept& k : group) {
      if (dropped[k.index]) continue;
      const Row<T>& other = out[k.index];
      // Compare b/g against other.b/k.scale.
      const T lhs = checked_mul(row.b, k.scale);
      const T rhs = checked_mul(other.b, g);
      if (rhs >= lhs && subset(other.history, row.history)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    for (const Kept& k : group) {
      if (dropped[k.index]) continue;
      const Row<T>& other = out[k.index];
      const T lhs = checked_mul(row.b, k.scale);
      const T rhs = checked_mul(other.b, g);
      if (lhs >= rhs && subset(row.history, other.history)) dropped[k.index] = true;
    }
    group.push_back({out.size(), g});
    out.push_back(std::move(row));
    dropped.push_back(false);
  }
  std::vector<Row<T>> kept;
  kept.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!dropped[i]) kept.push_back(std::move(out[i]));
  }
  return kept;
}

template <class T>
std::optional<std::vector<Rational>> eliminate(int nvars, std::vector<Row<T>> rows, bool track_history,
                                               std::size_t max_rows) {
  struct Stage {
    int var;
    std::vector<Row<T>> rows;
  };
  std::vector<Stage> stages;
  std::vector<bool> done(nvars, false);

  auto prune = [](std::vector<Row<T>>& current) -> bool {
    std::vector<Row<T>> kept;
    kept.reserve(current.size());
    for (auto& r : current) {
      if (all_zero(r.a)) {
        if (r.b > 0) return false;
        continue;
      }
      kept.push_back(std::move(r));
    }
    current = std::move(kept);
    return true;
  };

  if (!prune(rows)) return std::nullopt;
  rows = dedupe(std::move(rows));

  for (int step = 0; step < nvars; ++step) {
    int best = -1;
    long long best_cost = 0;
    for (int v = 0; v < nvars; ++v) {
      if (done[v]) continue;
      long long p = 0, q = 0;
      for (const auto& r : rows) {
        const int s = sign_of(r.a[v]);
        p += s > 0;
        q += s < 0;
      }
      const long long cost = p * q - p - q;
      if (best == -1 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    done[best] = true;
    std::vector<Row<T>> next;
    std::vector<const Row<T>*> pos, neg;
    for (const auto& r : rows) {
      const int s = sign_of(r.a[best]);
      if (s > 0) {
        pos.push_back(&r);
      } else if (s < 0) {
        neg.push_back(&r);
      } else {
        next.push_back(r);
      }
    }
    const std::size_t allowed = static_cast<std::size_t>(step) + 2;
    for (const Row<T>* p : pos) {
      for (const Row<T>* q : neg) {
        Row<T> combined;
        if (track_history) {
          combined.history = p->history | q->history;
          if (combined.history.count() > allowed) continue;
        }
        const T mp = -q->a[best];
        const T mq = p->a[best];
        combined.a.resize(nvars);
        for (int j = 0; j < nvars; ++j) {
          combined.a[j] = checked_add(checked_mul(mp, p->a[j]), checked_mul(mq, q->a[j]));
        }
        combined.b = checked_add(checked_mul(mp, p->b), checked_mul(mq, q->b));
        normalize(combined);
        next.push_back(std::move(combined));
      }
    }
    stages.push_back({best, std::move(rows)});
    if (!prune(next)) return std::nullopt;
    rows = dedupe(std::move(next));
    if (rows.size() > max_rows) {
      throw EliminationBlowup("Fourier-Motzkin exceeded " + std::to_string(max_rows) + " rows");
    }
  }

  std::vector<Rational> x(nvars, 0);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const int k = it->var;
    std::optional<Rational> lo, hi;
    for (const auto& r : it->rows) {
      const int s = sign_of(r.a[k]);
      if (s == 0) continue;
      Rational slack = as_rational(r.b);
      for (int j = 0; j < nvars; ++j) {
        if (j != k && r.a[j] != 0) slack -= as_rational(r.a[j]) * x[j];
      }
      const Rational bound = slack / as_rational(r.a[k]);
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rational value = 0;
    if (lo && hi) {
      if (*lo > *hi) throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      value = Rational(c) <= *hi ? Rational(c) : *lo;
    } else if (lo) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      value = Rational(c);
    } else if (hi) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      value = Rational(f);
    }
    x[k] = value;
  }
  return x;
}

// Clears denominators row by row; every row becomes a . x >= b.
std::vector<Row<Integer>> integer_rows(const LinearSystem& system, bool& track_history) {
  std::vector<Row<Integer>> rows;
  track_history = system.rows.size() <= kHistoryBits;
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    const auto& src = system.rows[i];
    Integer l = src.rhs.get_den();
    for (const auto& c : src.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Row<Integer> row;
    const int flip = src.sense == Sense::AtLeast ? 1 : -1;
    row.a.reserve(src.coeffs.size());
    for (const auto& c : src.coeffs) {
      Rational scaled = c * Rational(l) * flip;
      row.a.push_back(scaled.get_num());
    }
    Rational b = src.rhs * Rational(l) * flip;
    row.b = b.get_num();
    if (track_history) row.history.set(i);
    normalize(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::optional<std::vector<Rational>> solve_fourier_motzkin(const LinearSystem& system, std::size_t max_rows) {
  bool track_history = false;
  auto rows = integer_rows(system, track_history);
  bool fits = true;
  for (const auto& r : rows) {
    fits = fits && r.b.fits_slong_p();
    for (const auto& c : r.a) fits = fits && c.fits_slong_p();
  }
  std::optional<std::vector<Rational>> result;
  bool solved = false;
  if (fits) {
    std::vector<Row<long long>> small;
    small.reserve(rows.size());
    for (const auto& r : rows) {
      Row<long long> s;
      s.history = r.history;
      s.b = r.b.get_si();
      for (const auto& c : r.a) s.a.push_back(c.get_si());
      small.push_back(std::move(s));
    }
    try {
      result = eliminate(system.variables, std::move(small), track_history, max_rows);
      solved = true;
    } catch (const Overflow&) {
      solved = false;
    }
  }
  if (!solved) result = eliminate(system.variables, std::move(rows), track_history, max_rows);
  if (result && !satisfies(system, *result)) {
    throw std::logic_error("Fourier-Motzkin produced a point violating the system");
  }
  return result;
}

std::optional<std::vector<Rational>> solve_simplex(const LinearSystem& system) {
  const int n = system.variables;
  const int m = static_cast<int>(system.rows.size());
  // Columns: x+ (n), x- (n), slack (m), artificial (m), rhs.
  const int slack0 = 2 * n, art0 = 2 * n + m, rhs = 2 * n + 2 * m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(rhs + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const auto& row = system.rows[i];
    const int flip = row.sense == Sense::AtLeast ? 1 : -1;
    Rational b = row.rhs * flip;
    const int neg = b < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      const Rational a = row.coeffs[j] * flip * neg;
      t[i][j] = a;
      t[i][n + j] = -a;
    }
    t[i][slack0 + i] = -neg;
    t[i][rhs] = b * neg;
    if (neg < 0) {
      basis[i] = slack0 + i;
    } else {
      t[i][art0 + i] = 1;
      basis[i] = art0 + i;
    }
  }
  auto cost = [&](int col) { return col >= art0 && col < rhs ? 1 : 0; };
  for (;;) {
    int enter = -1;
    for (int j = 0; j < rhs && enter < 0; ++j) {
      Rational d = cost(j);
      for (int i = 0; i < m; ++i) {
        if (cost(basis[i])) d -= t[i][j];
      }
      if (d < 0) enter = j;
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 simplex is bounded below; unbounded ray is impossible");
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (int j = 0; j <= rhs; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rational objective = 0;
  for (int i = 0; i < m; ++i) {
    if (cost(basis[i])) objective += t[i][rhs];
  }
  if (objective != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t[i][rhs];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][rhs];
  }
  if (!satisfies(system, x)) throw std::logic_error("simplex produced a point violating the system");
  return x;
}

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system) {
  if (system.variables <= kFourierMotzkinVariableLimit) {
    try {
      return solve_fourier_motzkin(system);
    } catch (const EliminationBlowup&) {
    }
  }
  return solve_simplex(system);
}

}  // namespace lss
