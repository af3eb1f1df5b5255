#pragma once

#include <string>
#include <string_view>

#include "blockperm/algebra.hpp"
#include "blockperm/brauertree.hpp"
#include "blockperm/modrep.hpp"
#include "blockperm/permgrp.hpp"
#include "json.hpp"

namespace blockperm::tools {

using json = nlohmann::ordered_json;

/// Text of `spec`, or the contents of the file when spec starts with '@'.
std::string read_spec(std::string_view spec);

/// sym:n, alt:n, cyclic:n, trivial:n, klein4, sylow:sym:n:p, or JSON
/// {"degree": n, "generators": [...]} with 0-based image lists or 1-based
/// cycle strings.
PermGroup parse_group(std::string_view spec);
PermGroup group_from_json(const json& j);
json group_to_json(const PermGroup& g);

/// natural, regular, trivial, perm:<subgroup>, sylow, block-sylow:i,
/// block-defect:i or source:i (blocks numbered as in block_decomposition).
GModule parse_module(std::string_view spec, const PermGroup& g, const Field& f,
                     std::uint64_t seed);

/// nakayama:n:L, matrix:n, group:<group spec>, or an algebra dump.
FinDimAlgebra parse_algebra(std::string_view spec, const Field& f);
/// {dim, field, constants: [[i, j, k, c], ...], labels, one}
json algebra_to_json(const FinDimAlgebra& a);
FinDimAlgebra algebra_from_json(const json& j, const Field* f = nullptr);

/// line:e, star:n[:m], or tree JSON.
BrauerTree parse_tree(std::string_view spec);
BrauerTree tree_from_json(const json& j);
json tree_to_json(const BrauerTree& t);
/// The same tree with the two sides of the bipartition exchanged.
BrauerTree reflected(const BrauerTree& t);

}  // namespace blockperm::tools
