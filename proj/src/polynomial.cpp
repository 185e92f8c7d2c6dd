#include "lss/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "lss/errors.hpp"
#include "lss/monomial_order.hpp"

namespace lss {

// ---------------------------------------------------------------- spaces

void VariableSpace::push(std::string name, std::pair<int, int> pos) {
  if (static_cast<int>(names_.size()) >= kMaxVariables) {
    throw std::invalid_argument("more than " + std::to_string(kMaxVariables) + " variables");
  }
  if (!lookup_.emplace(name, static_cast<int>(names_.size())).second) {
    throw std::invalid_argument("duplicate variable name " + name);
  }
  names_.push_back(std::move(name));
  positions_.push_back(pos);
}

namespace {

std::string indexed(const std::string& symbol, int i, int j) {
  return symbol + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void check_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

VariableSpace VariableSpace::block(int n, int d, std::string symbol) {
  check_positive(d, "d");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  VariableSpace s;
  s.layout_ = Layout::Block;
  s.rows_ = n;
  s.cols_ = d;
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= d; ++l) s.push(indexed(symbol, i, l), {i, l});
  }
  return s;
}

VariableSpace VariableSpace::generic(int m, int n, std::string symbol) {
  check_positive(m, "row count");
  check_positive(n, "column count");
  VariableSpace s;
  s.layout_ = Layout::Generic;
  s.rows_ = m;
  s.cols_ = n;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) s.push(indexed(symbol, i, j), {i, j});
  }
  return s;
}

VariableSpace VariableSpace::symmetric(int n, std::string symbol) {
  check_positive(n, "size");
  VariableSpace s;
  s.layout_ = Layout::Symmetric;
  s.rows_ = s.cols_ = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) s.push(indexed(symbol, i, j), {i, j});
  }
  return s;
}

VariableSpace VariableSpace::skew(int n, std::string symbol) {
  check_positive(n, "size");
  VariableSpace s;
  s.layout_ = Layout::Skew;
  s.rows_ = s.cols_ = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) s.push(indexed(symbol, i, j), {i, j});
  }
  return s;
}

VariableSpace VariableSpace::plain(std::vector<std::string> names) {
  VariableSpace s;
  s.layout_ = Layout::Plain;
  for (auto& name : names) s.push(std::move(name), {0, 0});
  return s;
}

VariableSpace VariableSpace::with_auxiliary(const std::string& name) const {
  VariableSpace s = *this;
  s.push(name, {0, 0});
  ++s.auxiliary_;
  return s;
}

std::optional<int> VariableSpace::index_of(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int VariableSpace::at(int i, int j) const {
  auto fail = [&]() -> int {
    throw std::out_of_range("no variable at position (" + std::to_string(i) + "," + std::to_string(j) + ")");
  };
  switch (layout_) {
    case Layout::Block:
    case Layout::Generic:
      if (i < 1 || i > rows_ || j < 1 || j > cols_) return fail();
      return (i - 1) * cols_ + (j - 1);
    case Layout::Symmetric:
    case Layout::Skew: {
      if (i > j) std::swap(i, j);
      const bool skew = layout_ == Layout::Skew;
      if (i < 1 || j > rows_ || (skew && i == j)) return fail();
      // Rows before i contribute (rows_ - r + 1) or (rows_ - r) entries each.
      int index = 0;
      for (int r = 1; r < i; ++r) index += skew ? rows_ - r : rows_ - r + 1;
      return index + (j - i) - (skew ? 1 : 0);
    }
    case Layout::Plain:
      break;
  }
  return fail();
}

std::pair<int, int> VariableSpace::position(int index) const { return positions_.at(index); }

// ---------------------------------------------------------------- monomials

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int power) {
  if (i < 0 || i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > 255) throw std::overflow_error("exponent out of range");
  degree_ += power - e_[i];
  e_[i] = static_cast<std::uint8_t>(power);
  if (power) {
    support_ |= std::uint64_t{1} << i;
  } else {
    support_ &= ~(std::uint64_t{1} << i);
  }
}

bool Monomial::is_squarefree() const {
  for (std::uint64_t s = support_; s; s &= s - 1) {
    if (e_[std::countr_zero(s)] > 1) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::uint64_t s = other.support_; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    const int e = e_[i] + other.e_[i];
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (support_ & ~other.support_) return false;
  if (degree_ > other.degree_) return false;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    r.e_[i] = static_cast<std::uint8_t>(r.e_[i] - e_[i]);
    if (r.e_[i] == 0) r.support_ &= ~(std::uint64_t{1} << i);
  }
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::uint64_t s = other.support_; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (other.e_[i] > r.e_[i]) {
      r.degree_ += other.e_[i] - r.e_[i];
      r.e_[i] = other.e_[i];
    }
  }
  r.support_ |= other.support_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = support_ * 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const int i = std::countr_zero(s);
    h = (h ^ (static_cast<std::size_t>(e_[i]) << (i % 56))) * 0x100000001B3ULL;
  }
  return h;
}

// ---------------------------------------------------------------- polynomials

Polynomial::Polynomial(SpacePtr space, const Rational& constant) : space_(std::move(space)) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(SpacePtr space, int index) {
  if (index < 0 || index >= space->size()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(space));
  p.terms_.emplace(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::term(SpacePtr space, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(space));
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == d; });
}

std::uint64_t Polynomial::support() const {
  std::uint64_t s = 0;
  for (const auto& [m, c] : terms_) s |= m.support();
  return s;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_space(const Polynomial& other) const {
  // A polynomial without a space is a constant and mixes with anything.
  if (!space_ || !other.space_) return;
  if (space_ != other.space_ && !(*space_ == *other.space_)) {
    throw std::invalid_argument("polynomials live in different variable spaces");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_space(other);
  if (!space_) space_ = other.space_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_space(other);
  if (!space_) space_ = other.space_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  Polynomial r(a.space_ ? a.space_ : b.space_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial r(space_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r(space_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::remapped(SpacePtr target, const std::vector<int>& index_map) const {
  Polynomial r(std::move(target));
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (std::uint64_t s = m.support(); s; s &= s - 1) {
      const int i = std::countr_zero(s);
      if (i >= static_cast<int>(index_map.size()) || index_map[i] < 0) {
        throw std::invalid_argument("variable has no image in the target space");
      }
      out.set(index_map[i], out.exponent(index_map[i]) + m.exponent(i));
    }
    r.add_term(out, c);
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.space_ && b.space_ && a.space_ != b.space_) return *a.space_ == *b.space_;
  return true;
}

// ---------------------------------------------------------------- text

std::string monomial_to_string(const Monomial& m, const VariableSpace& space) {
  std::string out;
  for (std::uint64_t s = m.support(); s; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (!out.empty()) out += '*';
    out += space.name(i);
    if (m.exponent(i) > 1) out += '^' + std::to_string(m.exponent(i));
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const int nvars = f.space() ? f.space()->size() : kMaxVariables;
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return degrevlex_compare(a.first, b.first, nvars) > 0;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = abs(c);
    if (m.is_one()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + '*';
      out += f.space() ? monomial_to_string(m, *f.space()) : std::string("?");
    }
  }
  return out;
}

namespace {

struct Token {
  enum Kind { Number, Name, Symbol, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      std::string name;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) name += s[i++];
      if (i < s.size() && s[i] == '[') {
        const std::size_t close = s.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated '[' at position " + std::to_string(i));
        name += '[';
        for (std::size_t k = i + 1; k < close; ++k) {
          if (!std::isspace(static_cast<unsigned char>(s[k]))) name += s[k];
        }
        name += ']';
        i = close + 1;
      }
      out.push_back({Token::Name, std::move(name), start});
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Symbol, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, SpacePtr space) : t_(std::move(tokens)), space_(std::move(space)) {}

  std::vector<Polynomial> list() {
    std::vector<Polynomial> out;
    if (peek().kind == Token::End) return out;
    out.push_back(expr());
    while (accept(",")) out.push_back(expr());
    expect_end();
    return out;
  }

  Polynomial single() {
    Polynomial p = expr();
    expect_end();
    return p;
  }

 private:
  const Token& peek() const { return t_[i_]; }

  bool accept(const char* sym) {
    if (peek().kind == Token::Symbol && peek().text == sym) {
      ++i_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(peek().pos));
  }

  void expect_end() {
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
  }

  Polynomial expr() {
    Polynomial acc(space_);
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept("*")) {
        acc = acc * power();
      } else if (accept("/")) {
        const Polynomial d = power();
        if (d.is_zero() || d.degree() != 0) fail("division by a non-constant or zero");
        acc *= 1 / d.coefficient(Monomial{});
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept("^")) {
      if (peek().kind != Token::Number) fail("expected an exponent");
      const int e = std::stoi(t_[i_++].text);
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    const Token& tok = peek();
    if (tok.kind == Token::Number) {
      ++i_;
      return Polynomial(space_, Rational(Integer(tok.text)));
    }
    if (tok.kind == Token::Name) {
      ++i_;
      const auto idx = space_->index_of(tok.text);
      if (!idx) {
        --i_;
        fail("unknown variable '" + tok.text + "'");
      }
      return Polynomial::variable(space_, *idx);
    }
    if (accept("(")) {
      Polynomial inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (accept("-")) return -atom();
    fail(tok.kind == Token::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  SpacePtr space_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const SpacePtr& space) {
  return Parser(tokenize(text), space).single();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const SpacePtr& space) {
  return Parser(tokenize(text), space).list();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<std::string> names;
  for (const auto& t : tokens) {
    if (t.kind == Token::Name && std::find(names.begin(), names.end(), t.text) == names.end()) names.push_back(t.text);
  }
  if (names.size() > static_cast<std::size_t>(kMaxVariables)) throw ParseError("too many variables");
  auto space = std::make_shared<const VariableSpace>(VariableSpace::plain(std::move(names)));
  return Parser(std::move(tokens), space).list();
}

// ---------------------------------------------------------------- json

nlohmann::json to_json(const Polynomial& f) {
  const int nvars = f.space() ? f.space()->size() : 0;
  nlohmann::json terms = nlohmann::json::array();
  std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return degrevlex_compare(a.first, b.first, nvars) > 0; });
  for (const auto& [m, c] : sorted) {
    std::vector<int> exps(nvars);
    for (int i = 0; i < nvars; ++i) exps[i] = m.exponent(i);
    terms.push_back({{"coeff", to_string(c)}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, const SpacePtr& space) {
  try {
    Polynomial p(space);
    for (const auto& t : j.at("terms")) {
      const auto exps = t.at("exps").get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != space->size()) throw ParseError("exponent vector has the wrong length");
      Monomial m;
      for (int i = 0; i < space->size(); ++i) m.set(i, exps[i]);
      const auto& coeff = t.at("coeff");
      p.add_term(m, coeff.is_string() ? parse_rational(coeff.get<std::string>()) : Rational(coeff.get<long>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::overflow_error& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

std::optional<std::vector<int>> multidegree_of(const Polynomial& f) {
  if (!f.space() || f.space()->layout() != VariableSpace::Layout::Block) {
    throw std::invalid_argument("multidegrees need a block variable space");
  }
  const VariableSpace& s = *f.space();
  std::optional<std::vector<int>> common;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> deg(s.rows(), 0);
    for (std::uint64_t b = m.support(); b; b &= b - 1) {
      const int i = std::countr_zero(b);
      const auto [row, col] = s.position(i);
      if (row == 0) return std::nullopt;
      deg[row - 1] += m.exponent(i);
    }
    if (common && *common != deg) return std::nullopt;
    common = std::move(deg);
  }
  if (!common) common = std::vector<int>(s.rows(), 0);
  return common;
}

}  // namespace lss
