#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "blockperm/algebra.hpp"
#include "blockperm/modrep.hpp"
#include "blockperm/permgrp.hpp"

namespace blockperm {

/// kG with the group-element basis in g.elements() order (small groups).
FinDimAlgebra group_algebra(const PermGroup& g, const Field& f);
/// Z(kG) on the class sums, in g.conjugacy_classes() order.
FinDimAlgebra class_algebra(const PermGroup& g, const Field& f);
/// Product in kG of coefficient vectors over g.elements().
Vec group_algebra_mul(const PermGroup& g, const Field& f, const Vec& x, const Vec& y);

struct BlockData {
  PermGroup group;
  const Field* field = nullptr;
  std::size_t index = 0;   // position in block_decomposition
  Vec idempotent;          // coefficients on group.elements()
  Vec class_coords;        // on conjugacy classes
  std::size_t dim = 0;
  bool is_principal = false;

  struct Cache;
  std::shared_ptr<Cache> cache;
};

/// Principal block first, then by decreasing dimension.
std::vector<BlockData> block_decomposition(const PermGroup& g, const Field& f,
                                           std::uint64_t seed = 1);

/// Keeps the coefficients on C_G(p); x must be fixed under conjugation by p.
Vec brauer_hom(const PermGroup& g, const Field& f, const Vec& x, const PermGroup& p);
bool brauer_nonzero(const PermGroup& g, const Vec& x, const PermGroup& q);

/// Largest p-subgroup class representative q with Br_q(b) != 0 (cached).
const PermGroup& defect_group(const BlockData& b);
/// A Sylow subgroup containing the chosen defect group representative.
const PermGroup& sylow_for(const BlockData& b);

/// B^P, on the basis b * (P-orbit sum) for selected orbits.
struct FixedPointAlgebra {
  FinDimAlgebra algebra;
  PermGroup p;
  std::vector<std::vector<std::uint32_t>> orbits;  // element indices
  std::vector<std::uint32_t> orbit_of;
  FqMatrix basis;  // rows in orbit-sum coordinates
  /// Coefficients on g.elements() of an element given in algebra coordinates.
  Vec to_group(const Vec& coords) const;
  /// Whether the Brauer image at p is nonzero.
  bool brauer_nonzero(const Vec& coords) const;
};
FixedPointAlgebra fixed_point_algebra(const BlockData& b, const PermGroup& p);

struct SourceIdempotent {
  PermGroup p;
  Vec coords;        // in B^P
  Vec group_coeffs;  // in kG
  std::size_t fixed_point_dim = 0;
};
SourceIdempotent source_idempotent(const BlockData& b, std::uint64_t seed = 1);

/// B i tensor_{kP} k as the image of right multiplication by i on k[G/P].
GModule source_permutation_module(const BlockData& b, const SourceIdempotent& i);
GModule source_permutation_module(const BlockData& b, std::uint64_t seed = 1);
/// B tensor_{kS} k as b k[G/S].
GModule block_sylow_module(const BlockData& b, const PermGroup& s);
GModule block_sylow_module(const BlockData& b);

struct BrauerCorrespondent {
  PermGroup normalizer;
  BlockData block;
};
BrauerCorrespondent brauer_correspondent(const BlockData& b, std::uint64_t seed = 1);

/// Number of simple modules of B: distinct composition factors of B tensor_S k.
std::size_t num_simples(const BlockData& b, std::uint64_t seed = 1);
/// dim End(B tensor_S k) as the rank of b on the S-fixed points of k[G/S].
std::size_t gamma_count(const BlockData& b, const PermGroup& s);
/// Dimension of the simple module of a defect-zero block.
std::size_t defect_zero_simple_dim(const BlockData& b);
/// N_G(P) = P C_G(P) for the defect group P.
bool nilpotent_hint(const BlockData& b);

}  // namespace blockperm
