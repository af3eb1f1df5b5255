#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blockperm/field.hpp"

namespace blockperm {

using Rng = std::mt19937_64;

/// Dense row-major matrix over a finite field.
class FqMatrix {
 public:
  using Elem = Field::Elem;

  FqMatrix() = default;
  FqMatrix(const Field& f, std::size_t rows, std::size_t cols);

  static FqMatrix identity(const Field& f, std::size_t n);
  static FqMatrix from_ints(const Field& f,
                            const std::vector<std::vector<long long>>& rows);
  /// Matrix with e_i * P = e_{images[i]}.
  static FqMatrix permutation(const Field& f,
                              const std::vector<std::uint32_t>& images);
  static FqMatrix random(const Field& f, std::size_t rows, std::size_t cols,
                         Rng& rng);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem* row(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row(std::size_t i) const { return data_.data() + i * cols_; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  FqMatrix transpose() const;
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix scaled(Elem c) const;
  FqMatrix& operator+=(const FqMatrix& o);
  /// this += c * o
  void add_scaled(const FqMatrix& o, Elem c);

  FqMatrix select_rows(const std::vector<std::size_t>& idx) const;
  FqMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                 std::size_t nc) const;
  FqMatrix vstack(const FqMatrix& o) const;
  FqMatrix hstack(const FqMatrix& o) const;
  void append_row(const Elem* v);
  void append_row(const std::vector<Elem>& v) { append_row(v.data()); }

  /// Row vector times matrix.
  std::vector<Elem> mul_vec(const Elem* v) const;
  std::vector<Elem> mul_vec(const std::vector<Elem>& v) const {
    return mul_vec(v.data());
  }
  Elem trace() const;

  /// One string per row: digits for q <= 10, else space separated values.
  std::vector<std::string> dump() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b);
  friend bool operator!=(const FqMatrix& a, const FqMatrix& b) {
    return !(a == b);
  }

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  FqMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);
/// Rows v with m * v^T = 0.
FqMatrix nullspace_basis(const FqMatrix& m);
/// Rows v with v * m = 0.
FqMatrix left_nullspace_basis(const FqMatrix& m);
/// x with a * x = b, or nullopt.
std::optional<FqMatrix> solve(const FqMatrix& a, const FqMatrix& b);
/// x with x * a = b, or nullopt.
std::optional<FqMatrix> solve_left(const FqMatrix& a, const FqMatrix& b);
std::optional<FqMatrix> inverse(const FqMatrix& m);
/// Basis of the smallest subspace containing the rows of `vectors` and
/// closed under v -> v * A for every A in `action`. Rows are the spun
/// vectors themselves in discovery order.
FqMatrix spin_basis(const FqMatrix& vectors,
                    const std::vector<FqMatrix>& action);
/// Row space basis in reduced echelon form.
FqMatrix row_space(const FqMatrix& m);
/// Basis of the intersection of two row spaces.
FqMatrix intersect_row_spaces(const FqMatrix& a, const FqMatrix& b);

/// Incrementally built semi-echelon basis of a row space. Optionally tracks
/// how each echelon row is expressed in the inserted vectors, which yields
/// coordinates with respect to the inserted (non-echelon) basis.
class EchelonSpace {
 public:
  using Elem = Field::Elem;

  EchelonSpace(const Field& f, std::size_t ambient, bool track = false);

  const Field& field() const { return *field_; }
  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return n_; }

  /// Reduces v in place. Returns true iff v reduces to zero.
  bool reduce(Elem* v) const;
  bool contains(const Elem* v) const;
  /// Adds v if independent of the current span; returns whether it was added.
  bool add(const Elem* v);
  bool add(const std::vector<Elem>& v) { return add(v.data()); }
  /// Coordinates of v in the inserted vectors (track mode), nullopt if v is
  /// outside the span.
  std::optional<std::vector<Elem>> coords(const Elem* v) const;
  /// Echelon rows.
  FqMatrix echelon() const;
  /// Inserted vectors in insertion order.
  const FqMatrix& inserted() const { return inserted_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const Field* field_;
  std::size_t n_;
  bool track_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::vector<Elem>> expr_;
  std::vector<std::size_t> pivots_;
  FqMatrix inserted_;
};

}  // namespace blockperm
