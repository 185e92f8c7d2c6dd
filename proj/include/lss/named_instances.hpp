#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lss/graph.hpp"
#include "lss/ideal_forge.hpp"

namespace lss {

/// A graph whose L_G(3) is not radical over Q, with a witness minor.
struct NonRadicalExample {
  std::string name;
  Graph graph;
  int d = 3;
  GeneratorSet ideal;
  std::vector<int> witness_rows;
  /// The minor of the block matrix Y on witness_rows and all d columns.
  Polynomial witness;
};

bool is_nonradical_example(std::string_view name);
/// "nrad1", "nrad2" or "nrad3". Throws ParseError for other names.
NonRadicalExample nonradical_example(std::string_view name);

/// Minor of the n x d block matrix Y of a block space on the given rows and
/// the first rows.size() columns.
Polynomial block_minor(const SpacePtr& space, const std::vector<int>& rows);

/// Every nonzero k-minor of Y, in the space of j.
GeneratorSet block_minor_pool(const GeneratorSet& j, int k);

/// Pool description "minors:k". Throws ParseError on anything else.
GeneratorSet parse_pool(std::string_view text, const GeneratorSet& j);

}  // namespace lss
