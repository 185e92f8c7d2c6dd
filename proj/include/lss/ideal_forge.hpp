#pragma once

#include <string>
#include <vector>

#include "lss/graph.hpp"
#include "lss/polynomial.hpp"

namespace lss {

struct GeneratorSet {
  std::vector<Polynomial> generators;
  SpacePtr space;
  std::string provenance;

  std::size_t size() const { return generators.size(); }
};

/// f_e = sum over l of prod_{i in e} y[i,l], one per edge in edge order, over
/// the block space [n] x [d]. Throws std::invalid_argument for d < 1.
GeneratorSet lss_generators(const Clutter& h, int d);
GeneratorSet lss_generators(const Graph& g, int d);

/// sum over k of y[i,2k-1] y[j,2k] - y[i,2k] y[j,2k-1] for each edge {i < j},
/// over the block space [n] x [2d].
GeneratorSet twisted_lss_generators(const Graph& g, int d);

/// On the right side of a bipartition: y[j,2k] -> y[j,2k-1] and
/// y[j,2k-1] -> -y[j,2k]. Takes twisted generators of a bipartite graph to
/// ordinary ones with twice as many columns, up to sign: the image is -f_e
/// when the smaller endpoint of e lies on the right.
Polynomial untwist(const Polynomial& f, const Bipartition& sides);

/// Entry of a matrix template: a variable index with a sign, or zero.
struct MatrixEntry {
  int variable = -1;
  int sign = 0;

  bool is_zero() const { return sign == 0; }
};

class MatrixTemplate {
 public:
  enum class Kind { Generic, Symmetric, Skew, Block };

  MatrixTemplate(Kind kind, int rows, int cols, SpacePtr space);

  Kind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SpacePtr& space() const { return space_; }
  /// 1-based position.
  const MatrixEntry& at(int i, int j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }
  void set(int i, int j, MatrixEntry e) { entries_[(i - 1) * cols_ + (j - 1)] = e; }
  Polynomial entry(int i, int j) const;
  std::size_t nonzero_count() const;

 private:
  Kind kind_;
  int rows_;
  int cols_;
  SpacePtr space_;
  std::vector<MatrixEntry> entries_;
};

/// m x n generic matrix with zeros at (i, j) for every edge {i, m+j} of g.
/// g lives on m+n vertices and every edge must join 1..m to m+1..m+n.
MatrixTemplate generic_template(int m, int n, const Graph& g);
/// Symmetric n x n with zeros at (i,j) and (j,i) for every edge.
MatrixTemplate symmetric_template(const Graph& g);
/// Skew-symmetric n x n, x[i,j] above the diagonal and -x[i,j] below,
/// with zeros at the edges.
MatrixTemplate skew_template(const Graph& g);
/// The n x d matrix Y = (y[i,l]).
MatrixTemplate block_template(int n, int d);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix to_matrix(const MatrixTemplate& t);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
/// Laplace expansion along the first row.
Polynomial determinant(const PolyMatrix& a);
/// Pf(A) = sum over j of (-1)^j a_{1j} Pf(A without rows/columns 1, j), j 1-based.
/// Throws std::invalid_argument for odd sizes.
Polynomial pfaffian(const PolyMatrix& a);
/// Block diagonal with d copies of [[0, 1], [-1, 0]].
PolyMatrix symplectic_unit(int d, const SpacePtr& space);

/// Minor of t on the given 1-based rows and columns.
Polynomial minor(const MatrixTemplate& t, const std::vector<int>& rows, const std::vector<int>& cols);
/// All nonzero size x size minors; exact duplicates are kept once. Throws
/// std::invalid_argument when size is out of range.
GeneratorSet minors(const MatrixTemplate& t, int size);
/// All nonzero principal Pfaffians of the given even size of a skew template.
GeneratorSet pfaffians(const MatrixTemplate& t, int size);

enum class HeightKind { Generic, Symmetric, Pfaffian };

/// Generic m x n, t-minors: (n+1-t)(m+1-t). Symmetric n x n, t-minors:
/// C(n-t+2, 2). Pfaffians of size t = 2k of an n x n skew matrix:
/// C(n-t+2, 2). m is ignored unless the kind is generic. Throws
/// std::invalid_argument outside the valid parameter range.
long long expected_height(HeightKind kind, int m, int n, int t);

/// The (i,j) entries of Y Y^T at the edges, computed by matrix multiplication.
GeneratorSet product_entry_generators(const Graph& g, int d);
/// For a bipartite graph with left side 1..m and right side m+1..m+n: the
/// entries of Y Z at the edges, where Y = (y[i,k]) is m x d and Z = (z[k,j])
/// is d x n.
GeneratorSet product_entry_generators_bipartite(int m, int n, const Graph& g, int d);

}  // namespace lss
