#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "blockperm/matrix.hpp"

namespace blockperm {

/// Univariate polynomial over a finite field, coefficients lowest degree
/// first, always trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  using Elem = Field::Elem;

  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);
  static Poly constant(const Field& f, Elem c);
  static Poly x(const Field& f);

  const Field& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem eval(Elem x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem s) const;
  Poly monic() const;
  Poly derivative() const;
  /// Quotient and remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(),
                                        b.c_.rbegin(), b.c_.rend());
  }

 private:
  void trim();
  const Field* field_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
/// (base^n) mod m
Poly powmod(const Poly& base, unsigned long long n, const Poly& m);

struct Factor {
  Poly poly;
  int multiplicity;
};

/// Square-free factorization of a monic polynomial.
std::vector<Factor> squarefree_factorization(const Poly& f);
/// Complete factorization into monic irreducibles, sorted by (degree,
/// coefficients), multiplicities merged.
std::vector<Factor> factor(const Poly& f, Rng& rng);
bool is_irreducible(const Poly& f);

/// Characteristic polynomial by Hessenberg reduction.
Poly char_poly(const FqMatrix& m);
/// Minimal polynomial of m relative to a start vector v (the monic generator
/// of {g : v * g(m) = 0}).
Poly local_min_poly(const FqMatrix& m, const std::vector<Field::Elem>& v);
/// Minimal polynomial of a square matrix.
Poly min_poly(const FqMatrix& m);
/// g(m) for a square matrix m.
FqMatrix eval_matrix(const Poly& g, const FqMatrix& m);

}  // namespace blockperm
