#include "doctest.h"

#include "blockperm/algebra.hpp"
#include "blockperm/module.hpp"
#include "blockperm/permgrp.hpp"

using namespace blockperm;

namespace {

// group algebra by regular matrices, basis = sorted group elements
FinDimAlgebra group_algebra(const PermGroup& g, const Field& f) {
  const auto& t = g.elements();
  const std::size_t n = t.size();
  std::vector<Field::Elem> mult(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + t.mul(i, j)] = 1;
  Vec one(n, 0);
  one[t.identity] = 1;
  return FinDimAlgebra(f, n, std::move(mult), std::move(one));
}

// k[x, y] / (x, y)^2
FinDimAlgebra radical_square_zero(const Field& f) {
  std::vector<Field::Elem> mult(27, 0);
  auto set = [&](int i, int j, int k) { mult[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 0, 1);
  set(0, 2, 2);
  set(2, 0, 2);
  return FinDimAlgebra(f, 3, std::move(mult), {1, 0, 0});
}

void check_decomposition(const FinDimAlgebra& a, const std::vector<Idempotent>& ids,
                         const Vec& e) {
  Vec sum = a.zero();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(a.is_idempotent(ids[i].coords));
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j) CHECK(a.is_zero(a.mul(ids[i].coords, ids[j].coords)));
    sum = a.add(sum, ids[i].coords);
  }
  CHECK(sum == e);
}

}  // namespace

TEST_CASE("constructed algebras are associative with identity") {
  const Field& f5 = Field::get(5);
  for (const auto& a :
       {FinDimAlgebra::matrix_algebra(f5, 2), cyclic_nakayama(f5, 3, 4),
        FinDimAlgebra::truncated_poly(f5, {0, 0, 1}), radical_square_zero(f5),
        group_algebra(PermGroup::symmetric(3), f5)}) {
    CHECK(a.is_associative());
    CHECK(a.is_identity(a.one()));
  }
}

TEST_CASE("radical examples") {
  CHECK(radical(FinDimAlgebra::matrix_algebra(Field::get(5), 2)).rows() == 0);
  const Field& f3 = Field::get(3);
  auto t = FinDimAlgebra::truncated_poly(f3, {0, 0, 1});
  auto j = radical(t);
  REQUIRE(j.rows() == 1);
  CHECK(j(0, 0) == 0);
  CHECK(radical(group_algebra(PermGroup::cyclic(3), f3)).rows() == 2);
  // S_3: one block at p = 3; at p = 2 a C_2-like block plus M_2(k)
  CHECK(radical(group_algebra(PermGroup::symmetric(3), f3)).rows() == 4);
  CHECK(radical(group_algebra(PermGroup::symmetric(3), Field::get(2))).rows() == 1);
  CHECK(radical(group_algebra(PermGroup::symmetric(3), Field::get(5))).rows() == 0);
  // non-prime field
  CHECK(radical(group_algebra(PermGroup::cyclic(2), Field::get(2, 2))).rows() == 1);
  CHECK(radical(group_algebra(PermGroup::alternating(4), Field::get(2, 2))).rows() == 9);
}

TEST_CASE("radical is a nilpotent ideal with semisimple quotient") {
  const Field& f2 = Field::get(2);
  for (const auto& a : {group_algebra(PermGroup::symmetric(4), f2),
                        cyclic_nakayama(Field::get(3), 2, 5)}) {
    auto pw = radical_powers(a);
    CHECK(pw.back().rows() == 0);
    auto q = quotient(a, pw.front());
    CHECK(radical(q.algebra).rows() == 0);
  }
}

TEST_CASE("primitive idempotent decompositions") {
  const Field& f2 = Field::get(2);
  auto kk = FinDimAlgebra::direct_product(
      {FinDimAlgebra::truncated_poly(f2, {0, 1}),
       FinDimAlgebra::truncated_poly(f2, {0, 1})});
  auto d = primitive_idempotent_decomposition(kk, kk.one());
  CHECK(d.size() == 2);
  check_decomposition(kk, d, kk.one());

  auto c3 = group_algebra(PermGroup::cyclic(3), Field::get(3));
  CHECK(primitive_idempotent_decomposition(c3, c3.one()).size() == 1);

  auto c4 = group_algebra(PermGroup::cyclic(4), Field::get(5));
  auto d4 = primitive_idempotent_decomposition(c4, c4.one());
  CHECK(d4.size() == 4);
  check_decomposition(c4, d4, c4.one());

  auto m3 = FinDimAlgebra::matrix_algebra(Field::get(2), 3);
  auto dm = primitive_idempotent_decomposition(m3, m3.one(), 7);
  CHECK(dm.size() == 3);
  check_decomposition(m3, dm, m3.one());
  for (const auto& e : dm) CHECK(e.iso_class == dm[0].iso_class);

  auto s3 = group_algebra(PermGroup::symmetric(3), Field::get(3));
  auto ds = primitive_idempotent_decomposition(s3, s3.one(), 3);
  CHECK(ds.size() == 2);
  check_decomposition(s3, ds, s3.one());
  CHECK(ds[0].iso_class != ds[1].iso_class);
  CHECK(central_primitive_idempotents(s3).size() == 1);

  auto a5 = group_algebra(PermGroup::alternating(5), Field::get(2, 2));
  auto blocks = central_primitive_idempotents(a5);
  REQUIRE(blocks.size() == 2);
  std::vector<std::size_t> dims;
  for (const auto& b : blocks) dims.push_back(rank(a5.left_matrix(b.coords)));
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{16, 44});
}

TEST_CASE("corners") {
  const Field& f3 = Field::get(3);
  auto m2 = FinDimAlgebra::matrix_algebra(f3, 2);
  CHECK(corner(m2, m2.one()).algebra.dim() == 4);
  Vec e11(4, 0);
  e11[0] = 1;
  auto c = corner(m2, e11);
  CHECK(c.algebra.dim() == 1);
  auto s3 = group_algebra(PermGroup::symmetric(3), f3);
  Rng rng(5);
  auto ds = primitive_idempotent_decomposition(s3, s3.one(), 3);
  auto cs = corner(s3, ds[0].coords);
  CHECK(cs.algebra.is_associative());
  for (int t = 0; t < 5; ++t) {
    Vec x = cs.algebra.random_element(rng), y = cs.algebra.random_element(rng);
    CHECK(cs.to_parent(cs.algebra.mul(x, y)) ==
          s3.mul(cs.to_parent(x), cs.to_parent(y)));
  }
}

TEST_CASE("self-injectivity and symmetry") {
  const Field& f7 = Field::get(7);
  auto c7 = group_algebra(PermGroup::cyclic(7), f7);
  CHECK(is_self_injective(c7).self_injective);
  auto sym = is_symmetric(c7);
  CHECK(sym.symmetric);
  REQUIRE(sym.form);
  CHECK(is_nondegenerate_form(c7, *sym.form));

  auto rsz = radical_square_zero(f7);
  auto w = is_self_injective(rsz);
  CHECK_FALSE(w.self_injective);
  CHECK(w.failing_projective == 0);
  CHECK_FALSE(is_symmetric(rsz).symmetric);

  auto n22 = cyclic_nakayama(f7, 2, 2);
  CHECK(n22.dim() == 4);
  auto w2 = is_self_injective(n22);
  CHECK(w2.self_injective);
  CHECK(w2.nakayama == std::vector<int>{1, 0});
  auto s2 = is_symmetric(n22);
  CHECK_FALSE(s2.symmetric);
  CHECK_FALSE(s2.weakly_symmetric);

  auto n33 = cyclic_nakayama(Field::get(5), 3, 3);
  CHECK(n33.dim() == 9);
  CHECK(is_self_injective(n33).self_injective);
  CHECK_FALSE(is_symmetric(n33).symmetric);
  // length = 1 mod n gives a symmetric Nakayama algebra
  CHECK(is_symmetric(cyclic_nakayama(Field::get(5), 2, 3)).symmetric);

  auto s3 = group_algebra(PermGroup::symmetric(3), Field::get(2));
  auto ss = is_symmetric(s3);
  CHECK(ss.symmetric);
  Vec std_form(6, 0);
  std_form[PermGroup::symmetric(3).elements().identity] = 1;
  CHECK(is_nondegenerate_form(s3, std_form));

  auto kk = FinDimAlgebra::direct_product(
      {FinDimAlgebra::truncated_poly(f7, {0, 1}), FinDimAlgebra::truncated_poly(f7, {0, 1})});
  CHECK(is_symmetric(kk).symmetric);
}

TEST_CASE("algebra shape") {
  auto n = cyclic_nakayama(Field::get(5), 2, 2);
  auto sh = algebra_shape(n);
  CHECK(sh.simple_dims == std::vector<std::size_t>{1, 1});
  CHECK(sh.projective_dims == std::vector<std::size_t>{2, 2});
  CHECK(sh.is_nakayama);
  CHECK(sh.is_split);
  CHECK(sh.is_basic);
  CHECK_FALSE(sh.is_local);
  for (std::size_t i = 0; i < 2; ++i) {
    REQUIRE(sh.loewy[i].size() == 2);
    CHECK(sh.loewy[i][0][i] == 1);
    CHECK(sh.loewy[i][1][1 - i] == 1);
  }
  auto m2 = FinDimAlgebra::matrix_algebra(Field::get(3), 2);
  auto sm = algebra_shape(m2);
  CHECK(sm.simple_dims == std::vector<std::size_t>{2});
  CHECK(sm.multiplicities == std::vector<std::size_t>{2});
  CHECK_FALSE(sm.is_basic);
  CHECK(basic_algebra(m2).algebra.dim() == 1);
  // GF(4) over GF(2) as an algebra: non-split
  auto f4 = FinDimAlgebra::truncated_poly(Field::get(2), {1, 1, 1});
  auto s4 = algebra_shape(f4);
  CHECK(s4.is_local);
  CHECK_FALSE(s4.is_split);
  CHECK(s4.endo_dims == std::vector<std::size_t>{2});
  // Cartan matrix of GF(3)S_3 is [[2,1],[1,2]]
  auto s3 = group_algebra(PermGroup::symmetric(3), Field::get(3));
  auto ss = algebra_shape(s3);
  CHECK(ss.cartan == std::vector<std::vector<std::size_t>>{{2, 1}, {1, 2}});
  std::size_t total = 0;
  for (std::size_t i = 0; i < ss.simple_dims.size(); ++i)
    total += ss.projective_dims[i] * ss.simple_dims[i];
  CHECK(total == s3.dim());
}

TEST_CASE("module kernel on group algebras") {
  const Field& f3 = Field::get(3);
  auto g = PermGroup::symmetric(3);
  const auto& t = g.elements();
  // regular module: row v * R_k is left multiplication by generator k
  std::vector<FqMatrix> act;
  for (const auto& s : g.generators()) {
    std::vector<std::uint32_t> img(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = t.index_of(s * t.elems[i]);
    act.push_back(FqMatrix::permutation(f3, img));
  }
  LinModule reg(f3, 6, act);
  CHECK(hom_space(reg, reg).dim() == 6);
  auto d = decompose(reg, 3);
  CHECK(d.total_dim() == 6);
  REQUIRE(d.summands.size() == 2);
  for (const auto& s : d.summands) {
    CHECK(s.module.dim == 3);
    CHECK(s.multiplicity == 1);
  }
  CHECK_FALSE(is_isomorphic(d.summands[0].module, d.summands[1].module));
  auto cf = composition_factors(reg);
  CHECK(cf.simples.size() == 2);
  CHECK(cf.multiplicity == std::vector<std::size_t>{3, 3});
  auto layers = radical_layers(d.summands[0].module, cf);
  CHECK(layers.size() == 3);
  auto soc = socle_layers(d.summands[0].module, cf);
  CHECK(soc.size() == 3);

  Rng rng(2);
  CHECK(meataxe_split(reg, rng).has_value());

  // natural 3-point module at p = 3: composition factors 1,1,1 in
  // two classes (trivial twice, sign once)
  std::vector<FqMatrix> nat;
  for (const auto& s : g.generators()) nat.push_back(FqMatrix::permutation(f3, s.images()));
  LinModule m(f3, 3, nat);
  auto cm = composition_factors(m);
  std::size_t tot = 0;
  for (std::size_t i = 0; i < cm.simples.size(); ++i) tot += cm.multiplicity[i] * cm.simples[i].dim;
  CHECK(tot == 3);
  CHECK(decompose(m).summands.size() == 1);  // uniserial
}

TEST_CASE("isomorphism testing under change of basis") {
  const Field& f2 = Field::get(2);
  auto g = PermGroup::symmetric(4);
  std::vector<FqMatrix> nat;
  for (const auto& s : g.generators()) nat.push_back(FqMatrix::permutation(f2, s.images()));
  LinModule m(f2, 4, nat);
  Rng rng(11);
  FqMatrix p;
  do {
    p = FqMatrix::random(f2, 4, 4, rng);
  } while (!inverse(p));
  auto pi = *inverse(p);
  std::vector<FqMatrix> conj;
  for (const auto& a : nat) conj.push_back(pi * a * p);
  LinModule m2(f2, 4, conj);
  CHECK(is_isomorphic(m, m2));
  CHECK(is_isomorphic(m, transpose_module(m)));
  auto e = hom_space(m, m);
  auto end = endomorphism_algebra(m, e);
  CHECK(end.is_associative());
  CHECK(end.is_identity(end.one()));
}
