#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lss/rational.hpp"

namespace lss {

enum class Sense { AtLeast, AtMost };

/// coeffs . x (>= | <=) rhs
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::AtLeast;
  Rational rhs;
};

struct LinearSystem {
  int variables = 0;
  std::vector<LinearConstraint> rows;

  void add(std::vector<Rational> coeffs, Sense sense, Rational rhs);
};

/// Raised when Fourier-Motzkin elimination exceeds its row limit.
class EliminationBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point);

/// Exact Fourier-Motzkin elimination with back-substitution. Rows carry
/// integer coefficients (denominators are cleared first); 64-bit arithmetic
/// is used until an overflow forces a restart in GMP integers. Kohler's
/// criterion and duplicate-row merging keep the intermediate systems small.
/// Throws EliminationBlowup when an intermediate system exceeds max_rows.
std::optional<std::vector<Rational>> solve_fourier_motzkin(const LinearSystem& system,
                                                           std::size_t max_rows = 20000);

/// Exact phase-1 simplex (Bland's rule) over free variables.
std::optional<std::vector<Rational>> solve_simplex(const LinearSystem& system);

/// Fourier-Motzkin for up to kFourierMotzkinVariableLimit variables, phase-1
/// simplex beyond that or when elimination blows up.
inline constexpr int kFourierMotzkinVariableLimit = 14;
std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system);

}  // namespace lss
