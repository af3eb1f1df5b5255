#include "doctest.h"

#include "blockperm/matrix.hpp"
#include "blockperm/poly.hpp"

using namespace blockperm;

namespace {

// x generates the multiplicative group iff its order is exactly q - 1
unsigned mult_order(const Field& f, Field::Elem a) {
  Field::Elem x = a;
  unsigned k = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

FqMatrix rand_mat(const Field& f, std::size_t r, std::size_t c, Rng& rng,
                  unsigned sparsity = 0) {
  FqMatrix m = FqMatrix::random(f, r, c, rng);
  if (sparsity)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % sparsity) m(i, j) = 0;
  return m;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively on GF(4), GF(8), GF(9)") {
  for (auto spec : {"4", "8", "9", "2^2", "GF(9)"}) {
    const Field& f = Field::parse(spec);
    const unsigned q = f.q();
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("fields are interned and parse equivalently") {
  CHECK(&Field::parse("4") == &Field::get(2, 2));
  CHECK(&Field::parse("2^2") == &Field::get(2, 2));
  CHECK(&Field::parse("7") == &Field::get(7));
  CHECK_THROWS_AS(Field::parse("6"), ParseError);
  CHECK_THROWS_AS(Field::parse("x"), ParseError);
  CHECK_THROWS_AS(Field::get(2, 9), Error);
  CHECK(Field::get(7).name() == "7");
  CHECK(Field::get(3, 2).name() == "3^2");
}

TEST_CASE("tabulated moduli are irreducible and primitive") {
  const std::pair<unsigned, unsigned> all[] = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 2},
      {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {13, 2}};
  for (auto [p, e] : all) {
    const Field& f = Field::get(p, e);
    const Field& fp = Field::get(p);
    std::vector<Field::Elem> c;
    for (auto x : f.modulus()) c.push_back(static_cast<Field::Elem>(x));
    CHECK(is_irreducible(Poly(fp, c)));
    CHECK(mult_order(f, f.generator()) == f.q() - 1);
  }
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
    const Field& f = Field::get(p);
    CHECK(mult_order(f, f.generator()) == p - 1);
  }
}

TEST_CASE("frobenius fixes exactly the prime field") {
  for (auto spec : {"4", "8", "9", "25", "49"}) {
    const Field& f = Field::parse(spec);
    std::vector<bool> hit(f.q(), false);
    for (unsigned a = 0; a < f.q(); ++a) {
      auto b = f.frobenius(a);
      CHECK(hit[b] == false);
      hit[b] = true;
      CHECK((b == a) == f.in_prime_field(a));
    }
  }
}

TEST_CASE("rref examples") {
  const Field& f2 = Field::get(2);
  auto r = rref(FqMatrix::identity(f2, 3));
  CHECK(r.matrix == FqMatrix::identity(f2, 3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);

  const Field& f7 = Field::get(7);
  auto z = rref(FqMatrix(f7, 2, 4));
  CHECK(z.matrix == FqMatrix(f7, 2, 4));
  CHECK(z.pivots.empty());
  CHECK(z.rank == 0);

  const Field& f5 = Field::get(5);
  auto m = FqMatrix::from_ints(f5, {{1, 2}, {2, 4}});
  auto rm = rref(m);
  CHECK(rm.matrix == FqMatrix::from_ints(f5, {{1, 2}, {0, 0}}));
  CHECK(rm.rank == 1);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_basis(FqMatrix::identity(Field::get(3), 3)).rows() == 0);
  const Field& f2 = Field::get(2);
  CHECK(nullspace_basis(FqMatrix(f2, 1, 2)).rows() == 2);
  auto n = nullspace_basis(FqMatrix::from_ints(f2, {{1, 1}}));
  CHECK(n == FqMatrix::from_ints(f2, {{1, 1}}));
}

TEST_CASE("solve examples") {
  const Field& f5 = Field::get(5);
  auto b = FqMatrix::from_ints(f5, {{1, 4}, {3, 2}});
  CHECK(*solve(FqMatrix::identity(f5, 2), b) == b);
  CHECK_FALSE(solve(FqMatrix(f5, 2, 2), b).has_value());
  auto x = solve(FqMatrix::from_ints(f5, {{1, 1}, {0, 1}}),
                 FqMatrix::from_ints(f5, {{2}, {3}}));
  REQUIRE(x.has_value());
  CHECK(*x == FqMatrix::from_ints(f5, {{4}, {3}}));
  CHECK_THROWS_AS(solve(FqMatrix(f5, 2, 2), FqMatrix(f5, 3, 1)),
                  DimensionMismatch);
}

TEST_CASE("spin examples") {
  const Field& f2 = Field::get(2);
  auto swap = FqMatrix::permutation(f2, {1, 0});
  CHECK(spin_basis(FqMatrix::identity(f2, 2), {swap}).rows() == 2);
  CHECK(spin_basis(FqMatrix(f2, 0, 2), {swap}).rows() == 0);
  CHECK(spin_basis(FqMatrix::from_ints(f2, {{1, 0}}), {swap}).rows() == 2);
  CHECK(spin_basis(FqMatrix::from_ints(f2, {{1, 1}}), {swap}).rows() == 1);
  CHECK_THROWS_AS(spin_basis(FqMatrix::identity(f2, 3), {swap}),
                  DimensionMismatch);
}

TEST_CASE("linear algebra properties on random matrices") {
  Rng rng(7);
  for (auto spec : {"2", "3", "4", "7", "9"}) {
    const Field& f = Field::parse(spec);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9, k = 1 + rng() % 9;
      FqMatrix a = rand_mat(f, r, c, rng, trial % 3 + 1);
      FqMatrix b = rand_mat(f, c, k, rng, trial % 2 + 1);
      auto ra = rref(a);
      CHECK(rref(ra.matrix).matrix == ra.matrix);
      CHECK(ra.rank == rank(a));
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
      CHECK(rank(a.transpose()) == rank(a));
      FqMatrix n = nullspace_basis(a);
      CHECK(n.rows() == c - ra.rank);
      CHECK(rank(n) == n.rows());
      if (n.rows()) CHECK((a * n.transpose()).is_zero());
      FqMatrix y = rand_mat(f, c, 2, rng);
      auto x = solve(a, a * y);
      REQUIRE(x.has_value());
      CHECK(a * *x == a * y);
      if (r == c) {
        auto inv = inverse(a);
        CHECK(inv.has_value() == (ra.rank == r));
        if (inv) CHECK((a * *inv).is_identity());
      }
    }
  }
}

TEST_CASE("echelon space coordinates") {
  Rng rng(3);
  const Field& f = Field::get(3, 2);
  EchelonSpace es(f, 6, true);
  FqMatrix vs = FqMatrix::random(f, 4, 6, rng);
  for (std::size_t i = 0; i < 4; ++i) es.add(vs.row(i));
  FqMatrix ins = es.inserted();
  std::vector<Field::Elem> c{1, 2, 0, 5};
  c.resize(ins.rows());
  auto v = ins.mul_vec(c.data());
  auto got = es.coords(v.data());
  REQUIRE(got.has_value());
  CHECK(*got == c);
}

TEST_CASE("polynomial factorization and characteristic polynomials") {
  Rng rng(11);
  for (auto spec : {"2", "3", "4", "7", "8", "9"}) {
    const Field& f = Field::parse(spec);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 1 + rng() % 8;
      FqMatrix m = FqMatrix::random(f, n, n, rng);
      Poly cp = char_poly(m);
      CHECK(cp.degree() == static_cast<int>(n));
      CHECK(eval_matrix(cp, m).is_zero());
      Poly mp = min_poly(m);
      CHECK(eval_matrix(mp, m).is_zero());
      CHECK((cp % mp).is_zero());
      auto fac = factor(cp, rng);
      Poly prod = Poly::constant(f, 1);
      for (auto& fc : fac) {
        CHECK(is_irreducible(fc.poly));
        for (int k = 0; k < fc.multiplicity; ++k) prod = prod * fc.poly;
      }
      CHECK(prod == cp);
    }
  }
  // repeated p-th power factors
  const Field& f2 = Field::get(2);
  Poly x1(f2, {1, 1});
  Poly g = x1 * x1 * x1 * x1 * Poly(f2, {1, 1, 1});
  auto fac = factor(g, rng);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].poly == x1);
  CHECK(fac[0].multiplicity == 4);
}
