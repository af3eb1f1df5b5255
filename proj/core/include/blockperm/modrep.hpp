#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockperm/module.hpp"
#include "blockperm/permgrp.hpp"

namespace blockperm {

/// kG-module: one matrix per generator of `group`, acting on row vectors.
/// When `tags` is nonempty the basis is permuted by G and `perms[k]` holds
/// the image of each basis index under generator k.
struct GModule {
  PermGroup group;
  LinModule lin;
  std::vector<std::string> tags;
  std::vector<std::vector<std::uint32_t>> perms;

  const Field& field() const { return *lin.field; }
  std::size_t dim() const { return lin.dim; }
  const std::vector<FqMatrix>& action() const { return lin.action; }
  bool has_permutation_basis() const { return !tags.empty(); }
};

GModule make_gmodule(const PermGroup& g, const Field& f,
                     std::vector<FqMatrix> action);
/// Permutation module on points, given generator images.
GModule permutation_gmodule(const PermGroup& g, const Field& f,
                            std::vector<std::vector<std::uint32_t>> perms,
                            std::vector<std::string> tags);
GModule trivial_module(const PermGroup& g, const Field& f);
/// k[G/H] on left cosets; tags are coset representatives.
GModule permutation_module(const PermGroup& g, const PermGroup& h,
                           const Field& f);
GModule regular_module(const PermGroup& g, const Field& f);
/// The natural permutation module on the points moved by g.
GModule natural_module(const PermGroup& g, const Field& f);

GModule sub_gmodule(const GModule& m, const FqMatrix& basis);
GModule quotient_gmodule(const GModule& m, const FqMatrix& sub);
GModule dual_module(const GModule& m);
GModule direct_sum(const GModule& a, const GModule& b);

/// Matrix of an arbitrary element of m.group (word in the generators).
FqMatrix element_matrix(const GModule& m, const Perm& x);
/// Basis permutation of an element (permutation modules only).
std::vector<std::uint32_t> element_permutation(const GModule& m, const Perm& x);
/// Matrices of all elements of h (h <= m.group), in h.elements() order.
std::vector<FqMatrix> element_matrices(const GModule& m, const PermGroup& h);
/// Basis permutations of every element of m.group, in element-table order
/// (permutation modules only).
std::vector<std::vector<std::uint32_t>> all_element_permutations(
    const GModule& m);
/// Matrix of sum_g coeffs[g] g, coefficients indexed like
/// m.group.elements(). `perms` may hold all_element_permutations(m).
FqMatrix group_algebra_action(
    const GModule& m, const Vec& coeffs,
    const std::vector<std::vector<std::uint32_t>>* perms = nullptr);

/// Verifies R_{xy} = R_y R_x on sampled element pairs.
bool is_representation(const GModule& m, std::size_t samples = 32,
                       std::uint64_t seed = 1);

GModule restrict_module(const GModule& m, const PermGroup& h);
/// m is a module over h; returns Ind_h^g m on left cosets of h.
GModule induce_module(const GModule& m, const PermGroup& g);

/// Quotient of m by span{x u - x} for the right action (one matrix per
/// generator of p), which must commute with the left action.
GModule coinvariants(const GModule& m, const PermGroup& p,
                     const std::vector<FqMatrix>& right_action);
/// Right multiplication by the generators of p on the regular module.
std::vector<FqMatrix> regular_right_action(const PermGroup& g,
                                           const PermGroup& p, const Field& f);

HomSpace hom_space(const GModule& m, const GModule& n);
FinDimAlgebra endomorphism_algebra(const GModule& m);
/// Fixed points of h on m (rows).
FqMatrix fixed_points(const GModule& m, const PermGroup& h);

bool is_projective(const GModule& m);

struct GDecomposition {
  struct Part {
    GModule module;
    FqMatrix basis;
    std::size_t multiplicity = 1;
  };
  std::vector<Part> summands;
  FinDimAlgebra end_algebra;
  std::size_t total_dim() const;
};
GDecomposition decompose(const GModule& m, std::uint64_t seed = 1);
bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed = 1);

}  // namespace blockperm
