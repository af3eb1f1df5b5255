#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "blockperm/algebra.hpp"
#include "blockperm/matrix.hpp"

namespace blockperm {

/// A module over the algebra generated by a list of matrices, acting on
/// row vectors: v -> v * action[k]. Group modules, algebra modules and
/// End-modules all reduce to this.
struct LinModule {
  const Field* field = nullptr;
  std::size_t dim = 0;
  std::vector<FqMatrix> action;

  LinModule() = default;
  LinModule(const Field& f, std::size_t d, std::vector<FqMatrix> a);
  std::size_t gens() const { return action.size(); }
};

/// Restriction of the action to an invariant subspace (rows of basis).
LinModule submodule(const LinModule& m, const FqMatrix& basis);
/// Action on m / sub; the quotient basis is the set of standard vectors
/// outside the pivot columns of sub.
LinModule quotient_module(const LinModule& m, const FqMatrix& sub);
/// Module with transposed matrices (the linear dual for the opposite
/// action).
LinModule transpose_module(const LinModule& m);
LinModule direct_sum(const LinModule& a, const LinModule& b);
/// Smallest invariant subspace containing the rows of v (echelon basis).
FqMatrix spin(const LinModule& m, const FqMatrix& v);

/// Intertwiners F (dim m x dim n) with A^m_k F = F A^n_k for all k.
struct HomSpace {
  std::vector<FqMatrix> basis;
  FqMatrix seeds;           // rows generating the source module
  FqMatrix seed_images;     // row t: images of the seeds under basis[t]
  std::shared_ptr<const EchelonSpace> image_space;
  std::size_t dim() const { return basis.size(); }
  /// Coordinates of an intertwiner in `basis`.
  std::optional<Vec> coords(const FqMatrix& f) const;
};

HomSpace hom_space(const LinModule& m, const LinModule& n);
/// Structure constants with x * y = x o y (apply y first); the basis
/// element t corresponds to hom.basis[t].
FinDimAlgebra endomorphism_algebra(const LinModule& m, const HomSpace& end);

/// A proper nonzero submodule (echelon rows), or nullopt when m is
/// irreducible (Norton certificate).
std::optional<FqMatrix> meataxe_split(const LinModule& m, Rng& rng);
bool is_irreducible(const LinModule& m, std::uint64_t seed = 1);

struct CompositionFactors {
  std::vector<LinModule> simples;        // pairwise non-isomorphic
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> endo_dim;     // dim End(simple)
};
CompositionFactors composition_factors(const LinModule& m,
                                       std::uint64_t seed = 1);
/// Index of the simple in the list isomorphic to s, or -1.
int match_simple(const std::vector<LinModule>& simples, const LinModule& s);

/// Intersection of kernels of all maps to the given simples.
FqMatrix radical_of(const LinModule& m, const std::vector<LinModule>& simples);
/// Sum of images of all maps from the given simples.
FqMatrix socle_of(const LinModule& m, const std::vector<LinModule>& simples);

/// layers[i][j] = multiplicity of simples[j] in rad^i m / rad^{i+1} m.
std::vector<std::vector<std::size_t>> radical_layers(
    const LinModule& m, const CompositionFactors& cf);
/// layers[i][j] for soc^{i+1} m / soc^i m, bottom layer first.
std::vector<std::vector<std::size_t>> socle_layers(
    const LinModule& m, const CompositionFactors& cf);

struct Summand {
  LinModule module;
  FqMatrix basis;         // rows inside the parent module
  std::size_t multiplicity = 1;
  Vec idempotent;         // in the endomorphism algebra
};
struct Decomposition {
  std::vector<Summand> summands;   // one per isomorphism class
  FinDimAlgebra end_algebra;
  std::size_t total_dim() const;
};
Decomposition decompose(const LinModule& m, std::uint64_t seed = 1);

bool is_isomorphic(const LinModule& a, const LinModule& b,
                   std::uint64_t seed = 1);

/// Images of the rows of a permutation matrix, if the matrix is one.
std::optional<std::vector<std::uint32_t>> as_permutation(const FqMatrix& m);

}  // namespace blockperm
