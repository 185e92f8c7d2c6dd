#include "lss/named_instances.hpp"

#include <charconv>
#include <stdexcept>

#include "lss/errors.hpp"
#include "lss/graph_io.hpp"

namespace lss {

namespace {

std::vector<int> witness_rows_for(std::string_view name) {
  if (name == "nrad1") return {1, 5, 6};
  if (name == "nrad2") return {1, 2, 4};
  // Rows of the left vertices 1, 2, 4 of the K_{5,4} subgraph.
  if (name == "nrad3") return {1, 2, 4};
  throw ParseError("unknown example '" + std::string(name) + "'");
}

MatrixTemplate template_for(const SpacePtr& space) {
  if (!space || space->layout() != VariableSpace::Layout::Block) {
    throw std::invalid_argument("block minors need a block variable space");
  }
  MatrixTemplate t(MatrixTemplate::Kind::Block, space->rows(), space->cols(), space);
  for (int i = 1; i <= space->rows(); ++i) {
    for (int l = 1; l <= space->cols(); ++l) t.set(i, l, {space->at(i, l), 1});
  }
  return t;
}

}  // namespace

bool is_nonradical_example(std::string_view name) {
  return name == "nrad1" || name == "nrad2" || name == "nrad3";
}

NonRadicalExample nonradical_example(std::string_view name) {
  NonRadicalExample ex;
  ex.witness_rows = witness_rows_for(name);
  ex.name = std::string(name);
  ex.graph = named_graph(name);
  ex.ideal = lss_generators(ex.graph, ex.d);
  ex.ideal.provenance = ex.name + ": " + ex.ideal.provenance;
  ex.witness = block_minor(ex.ideal.space, ex.witness_rows);
  return ex;
}

Polynomial block_minor(const SpacePtr& space, const std::vector<int>& rows) {
  const MatrixTemplate t = template_for(space);
  const int k = static_cast<int>(rows.size());
  if (k < 1 || k > t.cols()) throw std::invalid_argument("minor size out of range");
  std::vector<int> cols;
  for (int c = 1; c <= k; ++c) cols.push_back(c);
  return minor(t, rows, cols);
}

GeneratorSet block_minor_pool(const GeneratorSet& j, int k) {
  GeneratorSet pool = minors(template_for(j.space), k);
  pool.space = j.space;
  pool.provenance = std::to_string(k) + "-minors of Y";
  return pool;
}

GeneratorSet parse_pool(std::string_view text, const GeneratorSet& j) {
  constexpr std::string_view prefix = "minors:";
  if (!text.starts_with(prefix)) throw ParseError("pool must look like minors:k");
  std::string_view rest = text.substr(prefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || k < 1) {
    throw ParseError("pool must look like minors:k with k >= 1");
  }
  if (k > j.space->cols() || k > j.space->rows()) {
    throw ParseError("minor size " + std::to_string(k) + " exceeds the matrix");
  }
  return block_minor_pool(j, k);
}

}  // namespace lss
