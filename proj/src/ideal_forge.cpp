#include "lss/ideal_forge.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lss {

namespace {

void check_d(int d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
}

SpacePtr share(VariableSpace s) { return std::make_shared<const VariableSpace>(std::move(s)); }

// Subsets of {1..n} of size k in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

void push_unique(GeneratorSet& out, Polynomial p) {
  if (p.is_zero()) return;
  if (std::find(out.generators.begin(), out.generators.end(), p) != out.generators.end()) return;
  out.generators.push_back(std::move(p));
}

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

GeneratorSet lss_generators(const Clutter& h, int d) {
  check_d(d);
  GeneratorSet out;
  out.space = share(VariableSpace::block(h.vertex_count(), d));
  out.provenance = "lss d=" + std::to_string(d);
  for (const auto& e : h.edges()) {
    Polynomial f(out.space);
    for (int l = 1; l <= d; ++l) {
      Monomial m;
      for (Vertex i : e) m.set(out.space->at(i, l), 1);
      f.add_term(m, 1);
    }
    out.generators.push_back(std::move(f));
  }
  return out;
}

GeneratorSet lss_generators(const Graph& g, int d) { return lss_generators(Clutter(g), d); }

GeneratorSet twisted_lss_generators(const Graph& g, int d) {
  check_d(d);
  GeneratorSet out;
  out.space = share(VariableSpace::block(g.vertex_count(), 2 * d));
  out.provenance = "twisted lss d=" + std::to_string(d);
  const auto& s = *out.space;
  for (const Edge& e : g.edges()) {
    Polynomial f(out.space);
    for (int k = 1; k <= d; ++k) {
      Monomial a, b;
      a.set(s.at(e.u, 2 * k - 1), 1);
      a.set(s.at(e.v, 2 * k), 1);
      b.set(s.at(e.u, 2 * k), 1);
      b.set(s.at(e.v, 2 * k - 1), 1);
      f.add_term(a, 1);
      f.add_term(b, -1);
    }
    out.generators.push_back(std::move(f));
  }
  return out;
}

Polynomial untwist(const Polynomial& f, const Bipartition& sides) {
  const auto& s = *f.space();
  if (s.layout() != VariableSpace::Layout::Block || s.cols() % 2 != 0) {
    throw std::invalid_argument("untwisting needs a block space with an even number of columns");
  }
  Polynomial out(f.space());
  for (const auto& [m, c] : f.terms()) {
    Monomial image;
    Rational coeff = c;
    for (int idx = 0; idx < s.size(); ++idx) {
      const int e = m.exponent(idx);
      if (!e) continue;
      auto [i, l] = s.position(idx);
      int target = idx;
      if (!sides.on_left(i)) {
        if (l % 2 == 0) {
          target = s.at(i, l - 1);
        } else {
          target = s.at(i, l + 1);
          if (e % 2) coeff = -coeff;
        }
      }
      image.set(target, image.exponent(target) + e);
    }
    out.add_term(image, coeff);
  }
  return out;
}

MatrixTemplate::MatrixTemplate(Kind kind, int rows, int cols, SpacePtr space)
    : kind_(kind), rows_(rows), cols_(cols), space_(std::move(space)), entries_(rows * cols) {}

Polynomial MatrixTemplate::entry(int i, int j) const {
  const MatrixEntry& e = at(i, j);
  if (e.is_zero()) return Polynomial(space_);
  Polynomial p = Polynomial::variable(space_, e.variable);
  return e.sign < 0 ? -p : p;
}

std::size_t MatrixTemplate::nonzero_count() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const MatrixEntry& e) { return !e.is_zero(); });
}

MatrixTemplate generic_template(int m, int n, const Graph& g) {
  if (g.vertex_count() != m + n) throw std::invalid_argument("graph must have m + n vertices");
  MatrixTemplate t(MatrixTemplate::Kind::Generic, m, n, share(VariableSpace::generic(m, n)));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) t.set(i, j, {t.space()->at(i, j), 1});
  }
  for (const Edge& e : g.edges()) {
    if (e.u > m || e.v <= m) throw std::invalid_argument("edge does not join the two sides");
    t.set(e.u, e.v - m, {});
  }
  return t;
}

MatrixTemplate symmetric_template(const Graph& g) {
  const int n = g.vertex_count();
  MatrixTemplate t(MatrixTemplate::Kind::Symmetric, n, n, share(VariableSpace::symmetric(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!g.has_edge(i, j)) t.set(i, j, {t.space()->at(i, j), 1});
    }
  }
  return t;
}

MatrixTemplate skew_template(const Graph& g) {
  const int n = g.vertex_count();
  MatrixTemplate t(MatrixTemplate::Kind::Skew, n, n, share(VariableSpace::skew(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && !g.has_edge(i, j)) t.set(i, j, {t.space()->at(i, j), i < j ? 1 : -1});
    }
  }
  return t;
}

MatrixTemplate block_template(int n, int d) {
  check_d(d);
  MatrixTemplate t(MatrixTemplate::Kind::Block, n, d, share(VariableSpace::block(n, d)));
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= d; ++l) t.set(i, l, {t.space()->at(i, l), 1});
  }
  return t;
}

PolyMatrix to_matrix(const MatrixTemplate& t) {
  PolyMatrix a(t.rows());
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.cols(); ++j) a[i - 1].push_back(t.entry(i, j));
  }
  return a;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t inner = b.size();
  if (a[0].size() != inner) throw std::invalid_argument("matrix shapes do not match");
  PolyMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      Polynomial s(a[i][0].space());
      for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      c[i].push_back(std::move(s));
    }
  }
  return c;
}

PolyMatrix transpose(const PolyMatrix& a) {
  if (a.empty()) return {};
  PolyMatrix t(a[0].size());
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) t[j].push_back(a[i][j]);
  }
  return t;
}

namespace {

PolyMatrix without(const PolyMatrix& a, const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) {
  PolyMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::find(drop_rows.begin(), drop_rows.end(), i) != drop_rows.end()) continue;
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (std::find(drop_cols.begin(), drop_cols.end(), j) == drop_cols.end()) row.push_back(a[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return Polynomial(nullptr, 1);
  if (n == 1) return a[0][0];
  Polynomial sum(a[0][0].space());
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Polynomial term = a[0][j] * determinant(without(a, {0}, {j}));
    if (j % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

Polynomial pfaffian(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n % 2) throw std::invalid_argument("Pfaffian of an odd-sized matrix");
  if (n == 0) return Polynomial(nullptr, 1);
  Polynomial sum(a[0][0].space());
  for (std::size_t j = 1; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Polynomial term = a[0][j] * pfaffian(without(a, {0, j}, {0, j}));
    // 1-based column j+1: sign (-1)^(j+1).
    if (j % 2) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

PolyMatrix symplectic_unit(int d, const SpacePtr& space) {
  PolyMatrix j(2 * d, std::vector<Polynomial>(2 * d, Polynomial(space)));
  for (int k = 0; k < d; ++k) {
    j[2 * k][2 * k + 1] = Polynomial(space, 1);
    j[2 * k + 1][2 * k] = Polynomial(space, -1);
  }
  return j;
}

Polynomial minor(const MatrixTemplate& t, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
  PolyMatrix a;
  for (int i : rows) {
    std::vector<Polynomial> row;
    for (int j : cols) row.push_back(t.entry(i, j));
    a.push_back(std::move(row));
  }
  Polynomial det = determinant(a);
  if (!det.space()) det = Polynomial(t.space(), det.coefficient(Monomial{}));
  return det;
}

GeneratorSet minors(const MatrixTemplate& t, int size) {
  if (size < 1 || size > std::min(t.rows(), t.cols())) throw std::invalid_argument("minor size out of range");
  GeneratorSet out;
  out.space = t.space();
  out.provenance = std::to_string(size) + "-minors";
  for_each_subset(t.rows(), size, [&](const std::vector<int>& rows) {
    for_each_subset(t.cols(), size, [&](const std::vector<int>& cols) { push_unique(out, minor(t, rows, cols)); });
  });
  return out;
}

GeneratorSet pfaffians(const MatrixTemplate& t, int size) {
  if (t.kind() != MatrixTemplate::Kind::Skew) throw std::invalid_argument("Pfaffians need a skew template");
  if (size < 2 || size % 2) throw std::invalid_argument("Pfaffian size must be even and positive");
  if (size > t.rows()) throw std::invalid_argument("Pfaffian size exceeds the matrix size");
  GeneratorSet out;
  out.space = t.space();
  out.provenance = std::to_string(size) + "-Pfaffians";
  for_each_subset(t.rows(), size, [&](const std::vector<int>& idx) {
    PolyMatrix a;
    for (int i : idx) {
      std::vector<Polynomial> row;
      for (int j : idx) row.push_back(t.entry(i, j));
      a.push_back(std::move(row));
    }
    push_unique(out, pfaffian(a));
  });
  return out;
}

long long expected_height(HeightKind kind, int m, int n, int t) {
  switch (kind) {
    case HeightKind::Generic:
      if (m < 1 || n < 1 || t < 1 || t > std::min(m, n)) throw std::invalid_argument("minor size out of range");
      return static_cast<long long>(n + 1 - t) * (m + 1 - t);
    case HeightKind::Symmetric:
      if (n < 1 || t < 1 || t > n) throw std::invalid_argument("minor size out of range");
      return choose2(n - t + 2);
    case HeightKind::Pfaffian:
      if (t < 2 || t % 2 || t > n) throw std::invalid_argument("Pfaffian size out of range");
      return choose2(n - t + 2);
  }
  return 0;
}

GeneratorSet product_entry_generators(const Graph& g, int d) {
  const MatrixTemplate y = block_template(g.vertex_count(), d);
  const PolyMatrix ymat = to_matrix(y);
  const PolyMatrix prod = multiply(ymat, transpose(ymat));
  GeneratorSet out;
  out.space = y.space();
  out.provenance = "entries of Y Y^T, d=" + std::to_string(d);
  for (const Edge& e : g.edges()) out.generators.push_back(prod[e.u - 1][e.v - 1]);
  return out;
}

GeneratorSet product_entry_generators_bipartite(int m, int n, const Graph& g, int d) {
  check_d(d);
  if (g.vertex_count() != m + n) throw std::invalid_argument("graph must have m + n vertices");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= d; ++k) names.push_back("y[" + std::to_string(i) + "," + std::to_string(k) + "]");
  }
  for (int k = 1; k <= d; ++k) {
    for (int j = 1; j <= n; ++j) names.push_back("z[" + std::to_string(k) + "," + std::to_string(j) + "]");
  }
  auto space = share(VariableSpace::plain(std::move(names)));
  PolyMatrix ym(m), zm(d);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < d; ++k) ym[i].push_back(Polynomial::variable(space, i * d + k));
  }
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < n; ++j) zm[k].push_back(Polynomial::variable(space, m * d + k * n + j));
  }
  const PolyMatrix prod = multiply(ym, zm);
  GeneratorSet out;
  out.space = space;
  out.provenance = "entries of Y Z, d=" + std::to_string(d);
  for (const Edge& e : g.edges()) {
    if (e.u > m || e.v <= m) throw std::invalid_argument("edge does not join the two sides");
    out.generators.push_back(prod[e.u - 1][e.v - m - 1]);
  }
  return out;
}

}  // namespace lss
