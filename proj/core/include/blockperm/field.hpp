#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blockperm/error.hpp"

namespace blockperm {

/// Finite field GF(p^e) with p^e <= 256.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of the residue polynomial (lowest degree first). The modulus
/// is the Conway polynomial for (p, e), so encodings are portable. Instances
/// are interned: two fields are the same field iff their addresses agree.
class Field {
 public:
  using Elem = std::uint8_t;

  static const Field& get(unsigned p, unsigned e = 1);
  /// Accepts "7", "2^2", "4" (prime power), "GF(9)".
  static const Field& parse(std::string_view spec);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  /// Conway modulus coefficients, lowest degree first, monic.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// Image of an integer under Z -> GF(p) -> GF(q).
  Elem from_int(long long v) const;
  /// The class of x in GF(q) used as primitive element (root of the modulus).
  Elem generator() const { return generator_; }
  bool in_prime_field(Elem a) const { return a < p_; }

  /// Row of the multiplication table: mul_row(c)[x] = c*x.
  const Elem* mul_row(Elem c) const { return &mul_[c * q_]; }
  /// dst[k] += c * src[k] for k < n.
  void axpy(Elem* dst, const Elem* src, Elem c, std::size_t n) const;
  /// dst[k] *= c.
  void scale(Elem* dst, Elem c, std::size_t n) const;

 private:
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned e_;
  unsigned q_;
  Elem generator_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

bool is_prime(unsigned long long n);

/// A single field element tagged with its field.
struct FqElem {
  const Field* field = nullptr;
  Field::Elem value = 0;

  FqElem() = default;
  FqElem(const Field& f, Field::Elem v) : field(&f), value(v) {}

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field == b.field && a.value == b.value;
  }
  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {*field, field->neg(value)}; }
  bool is_zero() const { return value == 0; }
};

}  // namespace blockperm
