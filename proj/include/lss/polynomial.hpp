#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lss/rational.hpp"

namespace lss {

/// Exponent vectors are fixed 64-slot arrays, so rings have at most this many variables.
inline constexpr int kMaxVariables = 64;

/// Names and dense indices of the ring variables.
///  - block: y[i,l] for i in 1..n, l in 1..d, index (i-1)*d + (l-1);
///  - generic: x[i,j] for an m x n matrix, row-major;
///  - symmetric: x[i,j] with i <= j; skew: x[i,j] with i < j;
///  - plain: arbitrary names in the given order.
/// Auxiliary variables (such as an elimination variable) are appended last.
class VariableSpace {
 public:
  enum class Layout { Block, Generic, Symmetric, Skew, Plain };

  static VariableSpace block(int n, int d, std::string symbol = "y");
  static VariableSpace generic(int m, int n, std::string symbol = "x");
  static VariableSpace symmetric(int n, std::string symbol = "x");
  static VariableSpace skew(int n, std::string symbol = "x");
  static VariableSpace plain(std::vector<std::string> names);

  VariableSpace with_auxiliary(const std::string& name) const;

  Layout layout() const { return layout_; }
  int size() const { return static_cast<int>(names_.size()); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int auxiliary_count() const { return auxiliary_; }
  const std::string& name(int index) const { return names_[index]; }
  std::optional<int> index_of(std::string_view name) const;
  /// Block: index of y[i,l]. Generic/symmetric/skew: index of x[i,j]
  /// (symmetric and skew accept either order of i, j). Throws
  /// std::out_of_range when there is no such variable.
  int at(int i, int j) const;
  /// Matrix position (i, j) of a layout variable; (0, 0) for auxiliaries and plain names.
  std::pair<int, int> position(int index) const;

  friend bool operator==(const VariableSpace& a, const VariableSpace& b) {
    return a.layout_ == b.layout_ && a.names_ == b.names_;
  }

 private:
  Layout layout_ = Layout::Plain;
  int rows_ = 0;
  int cols_ = 0;
  int auxiliary_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> positions_;
  std::map<std::string, int, std::less<>> lookup_;

  void push(std::string name, std::pair<int, int> pos);
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int index, int power = 1);

  int exponent(int i) const { return e_[i]; }
  int degree() const { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;

  void set(int i, int power);

  /// Throws std::overflow_error when an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> e_{};
  int degree_ = 0;
  std::uint64_t support_ = 0;
};

/// Sparse polynomial with rational coefficients; no zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}
  Polynomial(SpacePtr space, const Rational& constant);
  static Polynomial variable(SpacePtr space, int index);
  static Polynomial term(SpacePtr space, const Monomial& m, const Rational& c);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  /// Maximum total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  std::uint64_t support() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;
  Polynomial times(const Monomial& m) const;
  Polynomial pow(int e) const;

  /// Moves the polynomial into another space by index map (old index -> new index).
  Polynomial remapped(SpacePtr target, const std::vector<int>& index_map) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  SpacePtr space_;
  Terms terms_;

  void check_same_space(const Polynomial& other) const;
};

/// "3*y[1,2]^2*y[2,1] - 1/2*y[3,3]"; terms listed in degrevlex-descending order.
std::string to_string(const Polynomial& f);
std::string monomial_to_string(const Monomial& m, const VariableSpace& space);

/// Parses sums/products/powers/parentheses over the names of `space`.
/// Throws ParseError on syntax errors or unknown names.
Polynomial parse_polynomial(std::string_view text, const SpacePtr& space);
/// Comma-separated list over a fixed space.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const SpacePtr& space);
/// Comma-separated list whose variables are the identifiers in order of
/// first appearance.
std::vector<Polynomial> parse_polynomial_list(std::string_view text);

/// {"terms": [{"coeff": "num/den", "exps": [..]}, ...]}
nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j, const SpacePtr& space);

/// Common Z^n degree of f in a block space, deg y[i,l] = e_i; nullopt when f
/// is not multihomogeneous. The zero polynomial has degree zero.
std::optional<std::vector<int>> multidegree_of(const Polynomial& f);

}  // namespace lss

template <>
struct std::hash<lss::Monomial> {
  std::size_t operator()(const lss::Monomial& m) const { return m.hash(); }
};
