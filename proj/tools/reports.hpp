#pragma once

#include <string>
#include <vector>

#include "blockperm/blocks.hpp"
#include "blockperm/brauertree.hpp"
#include "blockperm/modrep.hpp"
#include "parse.hpp"

namespace blockperm::tools {

/// Composition factors of a module with printable labels: the dimension,
/// plus a letter when several simples share it.
struct LabelledSimples {
  CompositionFactors factors;
  std::vector<std::string> labels;
};
LabelledSimples label_simples(const LinModule& m, std::uint64_t seed);

/// {dim, simples, summands: [{dim, multiplicity, vertex_order,
/// loewy_layers, is_projective}]} sorted by (dim, loewy layers).
json decomposition_report(const GModule& m, const GDecomposition& d, std::uint64_t seed,
                          bool with_vertex);
json decomposition_report(const GModule& m, std::uint64_t seed, bool with_vertex);

json blocks_report(const std::vector<BlockData>& blocks, std::uint64_t seed);
json weights_report(const PermGroup& g, const Field& f, std::uint64_t seed);
json chars_report(int n, const PermGroup& h);
json tree_report(const BrauerTree& t, bool end_of_u, const Field& f);
json selfinj_report(const FinDimAlgebra& a, std::uint64_t seed);

}  // namespace blockperm::tools
