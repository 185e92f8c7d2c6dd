#include "lss/monomial_order.hpp"

#include <stdexcept>

namespace lss {

int degrevlex_compare(const Monomial& a, const Monomial& b, int variables, std::uint64_t mask) {
  int da = 0, db = 0;
  if (mask == ~std::uint64_t{0}) {
    da = a.degree();
    db = b.degree();
  } else {
    for (int i = 0; i < variables; ++i) {
      if (mask >> i & 1) {
        da += a.exponent(i);
        db += b.exponent(i);
      }
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = variables - 1; i >= 0; --i) {
    if (!(mask >> i & 1)) continue;
    const int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

MonomialOrder MonomialOrder::degrevlex(int variables) {
  MonomialOrder o;
  o.kind_ = Kind::Degrevlex;
  o.variables_ = variables;
  return o;
}

MonomialOrder MonomialOrder::lex(int variables) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.variables_ = variables;
  return o;
}

MonomialOrder MonomialOrder::weighted(int variables, std::vector<std::vector<Rational>> rows) {
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.variables_ = variables;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != variables) throw std::invalid_argument("weight row has the wrong length");
    Integer l = 1;
    for (const auto& w : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
    std::vector<Integer> big;
    for (const auto& w : row) big.push_back(Rational(w * Rational(l)).get_num());
    for (const auto& c : big) {
      if (abs(c) > Integer(1L << 40)) o.big_ = true;
    }
    std::vector<long long> small;
    for (const auto& c : big) small.push_back(c.fits_slong_p() ? c.get_si() : 0);
    o.scaled_.push_back(std::move(small));
    o.scaled_big_.push_back(std::move(big));
  }
  o.rows_ = std::move(rows);
  return o;
}

MonomialOrder MonomialOrder::elimination(int variables, std::uint64_t dropped) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.variables_ = variables;
  o.dropped_ = dropped;
  return o;
}

int MonomialOrder::compare_weights(const Monomial& a, const Monomial& b) const {
  for (std::size_t r = 0; r < scaled_.size(); ++r) {
    if (big_) {
      Integer s = 0;
      for (int i = 0; i < variables_; ++i) {
        const int diff = a.exponent(i) - b.exponent(i);
        if (diff != 0) s += scaled_big_[r][i] * diff;
      }
      if (s != 0) return sgn(s);
    } else {
      __int128 s = 0;
      for (int i = 0; i < variables_; ++i) {
        const int diff = a.exponent(i) - b.exponent(i);
        if (diff != 0) s += static_cast<__int128>(scaled_[r][i]) * diff;
      }
      if (s != 0) return s < 0 ? -1 : 1;
    }
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Degrevlex:
      return degrevlex_compare(a, b, variables_);
    case Kind::Lex:
      for (int i = 0; i < variables_; ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
      }
      return 0;
    case Kind::Weighted: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      if (int c = compare_weights(a, b)) return c;
      return degrevlex_compare(a, b, variables_);
    }
    case Kind::Elimination: {
      if (int c = degrevlex_compare(a, b, variables_, dropped_)) return c;
      return degrevlex_compare(a, b, variables_, ~dropped_);
    }
  }
  return 0;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no initial term");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (!best || order.less(*best, m)) best = &m;
  }
  return *best;
}

Polynomial initial_term(const Polynomial& f, const MonomialOrder& order) {
  const Monomial m = leading_monomial(f, order);
  return Polynomial::term(f.space(), m, f.coefficient(m));
}

MonomialOrder order_from_decomposition(const VariableSpace& space, const PmDecomposition& d) {
  if (space.layout() != VariableSpace::Layout::Block) {
    throw std::invalid_argument("weight orders from decompositions need a block variable space");
  }
  if (d.certificates.size() != d.parts.size()) throw std::invalid_argument("decomposition is missing certificates");
  const int n = space.rows();
  const int cols = space.cols();
  if (cols < static_cast<int>(d.parts.size())) {
    throw std::invalid_argument("d = " + std::to_string(cols) + " is smaller than the " +
                                std::to_string(d.parts.size()) + " parts");
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t l = 0; l < d.parts.size(); ++l) {
    const auto& w = d.certificates[l].weights;
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("certificate has the wrong vertex count");
    std::vector<Rational> row(space.size(), 0);
    for (int i = 1; i <= n; ++i) row[space.at(i, static_cast<int>(l) + 1)] = w[i - 1];
    rows.push_back(std::move(row));
  }
  return MonomialOrder::weighted(space.size(), std::move(rows));
}

}  // namespace lss
