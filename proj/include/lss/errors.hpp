#pragma once

#include <stdexcept>

namespace lss {

/// Malformed graph, clutter or polynomial input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A work budget ran out before the computation finished. The answer is
/// unknown, not negative.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The classifier derived both TRUE and FALSE for one query.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lss
