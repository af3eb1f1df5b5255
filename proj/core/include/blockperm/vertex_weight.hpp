#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockperm/blocks.hpp"
#include "blockperm/modrep.hpp"

namespace blockperm {

/// Image of Tr_Q^G(F) = sum over left cosets tQ of R_t^{-1} F R_t.
FqMatrix relative_trace(const GModule& m, const PermGroup& q, const FqMatrix& f);

/// Whether the identity of m lies in Tr_Q^G(End_{kQ}(m)).
bool is_relatively_projective(const GModule& m, const PermGroup& q);

struct VertexWitness {
  PermGroup subgroup;
  bool relatively_projective = false;
  std::string method;  // "index", "norm" or "trace"
};

struct VertexCertificate {
  PermGroup vertex;
  std::vector<VertexWitness> witnesses;  // one per tested subgroup class
};

/// Scans p-subgroup classes by increasing order; throws if End(m) is not local.
VertexCertificate vertex(const GModule& m);

/// Q-fixed basis points of a permutation module, as a module for N_G(Q).
GModule brauer_construction(const GModule& m, const PermGroup& q);

struct Weight {
  PermGroup subgroup;    // Q
  PermGroup normalizer;  // N_G(Q)
  PermGroup quotient;    // N_G(Q)/Q acting on the cosets of Q
  std::size_t simple_dim = 0;
  /// The simple module inflated to N_G(Q); absent for Q = 1.
  std::optional<GModule> simple;
  bool simple_is_projective = false;  // over k[N_G(Q)/Q]
  std::size_t block_index = 0;
};

/// One entry per conjugacy class of weights, sorted by block then |Q|.
std::vector<Weight> weights(const PermGroup& g, const Field& f,
                            const std::vector<BlockData>& blocks, std::uint64_t seed = 1);
std::vector<Weight> weights(const PermGroup& g, const Field& f, std::uint64_t seed = 1);

/// The summand of Ind_{N_G(Q)}^G(x) with vertex of order |Q|.
GModule green_correspondent(const GModule& x, const PermGroup& q, const PermGroup& g,
                            std::uint64_t seed = 1);

}  // namespace blockperm
