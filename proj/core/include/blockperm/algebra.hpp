#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockperm/matrix.hpp"

namespace blockperm {

using Vec = std::vector<Field::Elem>;

/// Associative unital algebra given by structure constants on a basis
/// b_0..b_{n-1}: b_i b_j = sum_k c(i,j,k) b_k. Elements are coordinate
/// vectors.
class FinDimAlgebra {
 public:
  using Elem = Field::Elem;

  FinDimAlgebra() = default;
  /// mult has n^3 entries laid out as c(i,j,k) = mult[(i*n + j)*n + k].
  FinDimAlgebra(const Field& f, std::size_t dim, std::vector<Elem> mult,
                Vec one, std::vector<std::string> labels = {});

  /// Span of square matrices closed under products and containing the
  /// identity; the basis is row-reduced from the given spanning set.
  static FinDimAlgebra from_matrices(const Field& f,
                                     const std::vector<FqMatrix>& spanning);
  static FinDimAlgebra matrix_algebra(const Field& f, std::size_t n);
  /// k[x]/(g) with basis 1, x, ..., x^{deg g - 1}.
  static FinDimAlgebra truncated_poly(const Field& f,
                                      const std::vector<Elem>& monic_g);
  static FinDimAlgebra direct_product(const std::vector<FinDimAlgebra>& parts);

  const Field& field() const { return *field_; }
  std::size_t dim() const { return n_; }
  const Vec& one() const { return one_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Elem c(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * n_ + j) * n_ + k];
  }
  const Elem* product_row(std::size_t i, std::size_t j) const {
    return &mult_[(i * n_ + j) * n_];
  }

  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(n_, 0); }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const Vec& x, Elem s) const;
  Vec random_element(Rng& rng) const;
  bool is_zero(const Vec& x) const;

  /// coords(x y) = coords(y) * left_matrix(x)
  FqMatrix left_matrix(const Vec& x) const;
  /// coords(y x) = coords(y) * right_matrix(x)
  FqMatrix right_matrix(const Vec& x) const;
  FqMatrix left_basis_matrix(std::size_t i) const;
  FqMatrix right_basis_matrix(std::size_t i) const;

  bool is_associative() const;
  bool is_commutative() const;
  bool is_identity(const Vec& e) const;
  bool is_idempotent(const Vec& e) const;
  bool is_central(const Vec& x) const;

  /// Basis (rows) of the center.
  FqMatrix center() const;

 private:
  const Field* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<Elem> mult_;
  Vec one_;
  std::vector<std::string> labels_;
};

/// A subalgebra or corner with its basis expressed in the parent.
struct EmbeddedAlgebra {
  FinDimAlgebra algebra;
  FqMatrix basis;  // rows: parent coordinates of the sub-basis
  /// parent element -> sub coordinates (element must lie in the span)
  Vec to_sub(const Vec& parent) const;
  Vec to_parent(const Vec& sub) const;

  EchelonSpace space;
};

/// Algebra structure on the row span `basis` of a (closed) subspace; the
/// identity is `one` (which must act as the identity on the span).
EmbeddedAlgebra subalgebra(const FinDimAlgebra& a, const FqMatrix& basis,
                           const Vec& one);
/// e a e with identity e.
EmbeddedAlgebra corner(const FinDimAlgebra& a, const Vec& e);

struct Quotient {
  FinDimAlgebra algebra;
  std::vector<std::size_t> complement;  // parent basis indices kept
  EchelonSpace ideal;
  Vec project(const Vec& parent) const;
  Vec lift(const Vec& q) const;
};
/// Quotient by a two-sided ideal (rows of `ideal`).
Quotient quotient(const FinDimAlgebra& a, const FqMatrix& ideal);

/// Jacobson radical (rows form a basis).
FqMatrix radical(const FinDimAlgebra& a);
/// Radical powers J, J^2, ... until zero (last entry is the zero space).
std::vector<FqMatrix> radical_powers(const FinDimAlgebra& a);
/// Product space span{xy : x in X, y in Y}.
FqMatrix product_space(const FinDimAlgebra& a, const FqMatrix& x,
                       const FqMatrix& y);

struct Idempotent {
  Vec coords;
  bool is_primitive = false;
  bool is_central = false;
  /// Primitive idempotents sharing a class generate isomorphic projectives.
  int iso_class = -1;
};

/// Pairwise orthogonal primitive idempotents summing to e.
std::vector<Idempotent> primitive_idempotent_decomposition(
    const FinDimAlgebra& a, const Vec& e, std::uint64_t seed = 1);
/// Block idempotents of a.
std::vector<Idempotent> central_primitive_idempotents(const FinDimAlgebra& a,
                                                      std::uint64_t seed = 1);

struct AlgebraShape {
  /// one entry per isomorphism class of simple modules
  std::vector<std::size_t> simple_dims;      // over the ground field
  std::vector<std::size_t> endo_dims;        // dim of End(simple)
  std::vector<std::size_t> projective_dims;  // dim of A e_i
  std::vector<std::size_t> multiplicities;   // copies of A e_i in A
  std::vector<std::vector<std::size_t>> cartan;  // cartan[i][j] = [Ae_j : S_i]
  /// loewy[i][layer][j] = multiplicity of S_j in layer of P_i
  std::vector<std::vector<std::vector<std::size_t>>> loewy;
  bool is_split = false;
  bool is_local = false;
  bool is_split_local = false;
  bool is_nakayama = false;
  bool is_basic = false;
};

AlgebraShape algebra_shape(const FinDimAlgebra& a, std::uint64_t seed = 1);

/// Basic algebra: corner at one primitive idempotent per class.
EmbeddedAlgebra basic_algebra(const FinDimAlgebra& a, std::uint64_t seed = 1);

struct SelfInjectivityWitness {
  bool self_injective = false;
  /// nakayama[i] = j with P_i isomorphic to I_j (basic-algebra indices), or
  /// -1 for the failing projective
  std::vector<int> nakayama;
  int failing_projective = -1;
};
SelfInjectivityWitness is_self_injective(const FinDimAlgebra& a,
                                         std::uint64_t seed = 1);

struct SymmetryWitness {
  bool symmetric = false;
  bool self_injective = false;
  bool weakly_symmetric = false;
  /// basis of symmetric functionals (rows, values on the basis)
  FqMatrix symmetric_functionals;
  /// a nondegenerate symmetric functional when one exists
  std::optional<Vec> form;
};
SymmetryWitness is_symmetric(const FinDimAlgebra& a, std::uint64_t seed = 1);
/// Gram matrix (i,j) -> lambda(b_i b_j) is invertible.
bool is_nondegenerate_form(const FinDimAlgebra& a, const Vec& lambda);

/// Truncated path algebra of the cyclic quiver with n vertices where all
/// paths of length >= len vanish; dimension n * len.
FinDimAlgebra cyclic_nakayama(const Field& f, std::size_t n, std::size_t len);

}  // namespace blockperm
