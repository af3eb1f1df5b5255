#include "doctest.h"

#include <algorithm>
#include <random>

#include "blockperm/blocks.hpp"

using namespace blockperm;

namespace {

std::vector<std::size_t> summand_dims(const GModule& m) {
  std::vector<std::size_t> out;
  for (const auto& part : decompose(m).summands)
    for (std::size_t i = 0; i < part.multiplicity; ++i) out.push_back(part.module.dim());
  std::sort(out.begin(), out.end());
  return out;
}

// dimension of b kG computed in the group algebra itself
std::size_t direct_block_dim(const PermGroup& g, const Field& f, const Vec& b) {
  const auto& t = g.elements();
  FqMatrix m(f, t.size(), t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    Vec e(t.size(), 0);
    e[x] = 1;
    auto row = group_algebra_mul(g, f, b, e);
    for (std::size_t y = 0; y < t.size(); ++y) m(x, y) = row[y];
  }
  return rank(m);
}

FqMatrix stack(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  FqMatrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

TEST_CASE("class algebra is the center of the group algebra") {
  const Field& f = Field::get(3);
  auto s4 = PermGroup::symmetric(4);
  auto z = class_algebra(s4, f);
  auto ga = group_algebra(s4, f);
  const auto& t = s4.elements();
  const auto& cc = s4.conjugacy_classes();
  CHECK(z.dim() == 5);
  // class sums multiply in kG the way the structure constants say
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j) {
      Vec ci(t.size(), 0), cj(t.size(), 0);
      for (auto x : cc.members[i]) ci[x] = 1;
      for (auto x : cc.members[j]) cj[x] = 1;
      Vec prod = group_algebra_mul(s4, f, ci, cj);
      Vec expect(t.size(), 0);
      for (std::size_t x = 0; x < t.size(); ++x) expect[x] = z.c(i, j, cc.class_of[x]);
      CHECK(prod == expect);
      CHECK(ga.mul(ci, cj) == prod);
    }
}

TEST_CASE("block dimensions") {
  struct Case {
    PermGroup g;
    unsigned p, e;
  };
  std::vector<Case> cases{{PermGroup::symmetric(3), 2, 1}, {PermGroup::symmetric(3), 3, 1},
                          {PermGroup::symmetric(4), 2, 1}, {PermGroup::symmetric(4), 3, 1},
                          {PermGroup::alternating(4), 2, 2}, {PermGroup::alternating(4), 3, 1},
                          {PermGroup::cyclic(3), 3, 1}, {PermGroup::symmetric(5), 3, 1}};
  for (const auto& c : cases) {
    const Field& f = Field::get(c.p, c.e);
    auto blocks = block_decomposition(c.g, f);
    std::size_t total = 0;
    for (const auto& b : blocks) {
      total += b.dim;
      if (c.g.order() <= 24) CHECK(b.dim == direct_block_dim(c.g, f, b.idempotent));
      CHECK(group_algebra_mul(c.g, f, b.idempotent, b.idempotent) == b.idempotent);
    }
    CHECK(total == c.g.order());
    CHECK(blocks.front().is_principal);
    CHECK(std::count_if(blocks.begin(), blocks.end(),
                        [](const BlockData& b) { return b.is_principal; }) == 1);
  }
  CHECK(block_decomposition(PermGroup::cyclic(3), Field::get(3)).size() == 1);
  auto s5 = block_decomposition(PermGroup::symmetric(5), Field::get(5));
  std::vector<std::size_t> dims;
  for (const auto& b : s5) dims.push_back(b.dim);
  CHECK(dims == std::vector<std::size_t>{70, 25, 25});
  auto a5 = block_decomposition(PermGroup::alternating(5), Field::get(2, 2));
  REQUIRE(a5.size() == 2);
  CHECK(a5[0].dim == 44);
  CHECK(a5[1].dim == 16);
}

TEST_CASE("brauer homomorphism") {
  const Field& f = Field::get(2);
  auto s4 = PermGroup::symmetric(4);
  const auto& t = s4.elements();
  auto q = sylow_of_symmetric(4, 2);
  auto v4 = PermGroup::klein4();
  // conjugation-fixed elements: random combinations of q-orbit sums
  std::vector<std::vector<std::uint32_t>> orbits;
  {
    std::vector<int> seen(t.size(), 0);
    for (std::uint32_t a = 0; a < t.size(); ++a) {
      if (seen[a]) continue;
      std::vector<std::uint32_t> orb;
      for (const auto& u : v4.elements().elems) {
        auto c = t.index_of(u * t.elems[a] * u.inverse());
        if (!seen[c]) {
          seen[c] = 1;
          orb.push_back(c);
        }
      }
      orbits.push_back(orb);
    }
  }
  std::mt19937_64 rng(3);
  auto random_fixed = [&] {
    Vec x(t.size(), 0);
    for (const auto& o : orbits) {
      Field::Elem c = static_cast<Field::Elem>(rng() % 2);
      for (auto i : o) x[i] = c;
    }
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = random_fixed(), y = random_fixed();
    CHECK(brauer_hom(s4, f, group_algebra_mul(s4, f, x, y), v4) ==
          group_algebra_mul(s4, f, brauer_hom(s4, f, x, v4), brauer_hom(s4, f, y, v4)));
  }
  for (const auto& o : orbits) {
    Vec x(t.size(), 0);
    for (auto i : o) x[i] = 1;
    Vec br = brauer_hom(s4, f, x, v4);
    CHECK(std::any_of(br.begin(), br.end(), [](auto v) { return v != 0; }) == (o.size() == 1));
  }
  Vec not_fixed(t.size(), 0);
  not_fixed[t.index_of(Perm({1, 0, 2, 3}))] = 1;
  CHECK_THROWS(brauer_hom(s4, f, not_fixed, q));
}

TEST_CASE("defect groups") {
  auto s4 = PermGroup::symmetric(4);
  for (unsigned p : {2u, 3u}) {
    auto blocks = block_decomposition(s4, Field::get(p));
    CHECK(defect_group(blocks[0]).order() == sylow_subgroup(s4, p).order());
  }
  auto s5 = block_decomposition(PermGroup::symmetric(5), Field::get(2));
  REQUIRE(s5.size() == 2);
  CHECK(defect_group(s5[0]).order() == 8);
  CHECK(defect_group(s5[1]).order() == 2);
  const auto& s = sylow_for(s5[1]);
  CHECK(s.order() == 8);
  for (const auto& u : defect_group(s5[1]).generators()) CHECK(s.contains(u));
  // defect zero
  auto s3 = block_decomposition(PermGroup::symmetric(3), Field::get(2));
  REQUIRE(s3.size() == 2);
  CHECK(defect_group(s3[1]).order() == 1);
  CHECK(s3[1].dim == 4);
}

TEST_CASE("fixed point algebras") {
  const Field& f = Field::get(3);
  auto s3 = PermGroup::symmetric(3);
  auto blocks = block_decomposition(s3, f);
  REQUIRE(blocks.size() == 1);
  auto whole = fixed_point_algebra(blocks[0], PermGroup::trivial(3));
  CHECK(whole.algebra.dim() == 6);
  auto shape = algebra_shape(whole.algebra);
  auto direct = algebra_shape(group_algebra(s3, f));
  CHECK(shape.simple_dims == direct.simple_dims);
  CHECK(shape.projective_dims == direct.projective_dims);
  // elements map back into kG multiplicatively
  for (std::size_t i = 0; i < whole.algebra.dim(); ++i)
    for (std::size_t j = 0; j < whole.algebra.dim(); ++j) {
      Vec a = whole.algebra.basis_vector(i), b = whole.algebra.basis_vector(j);
      CHECK(whole.to_group(whole.algebra.mul(a, b)) ==
            group_algebra_mul(s3, f, whole.to_group(a), whole.to_group(b)));
    }
  auto a4 = PermGroup::alternating(4);
  auto principal = block_decomposition(a4, f)[0];
  auto si = source_idempotent(principal);
  CHECK(si.p.order() == 3);
  auto fp = fixed_point_algebra(principal, si.p);
  CHECK(group_algebra_mul(a4, f, si.group_coeffs, si.group_coeffs) == si.group_coeffs);
  // i B i
  std::size_t corner = 0;
  {
    std::vector<Vec> prods;
    for (std::size_t k = 0; k < fp.algebra.dim(); ++k)
      prods.push_back(fp.algebra.mul(fp.algebra.mul(si.coords, fp.algebra.basis_vector(k)),
                                     si.coords));
    corner = rank(stack(f, prods, fp.algebra.dim()));
  }
  // the principal block is isomorphic to kC_3, commutative, so B^P = B
  CHECK(fp.algebra.dim() == 3);
  CHECK(corner == 3);
  // iBi inside the full block
  const auto& t = a4.elements();
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < t.size(); ++x) {
    Vec e(t.size(), 0);
    e[x] = 1;
    rows.push_back(group_algebra_mul(
        a4, f, group_algebra_mul(a4, f, si.group_coeffs,
                                 group_algebra_mul(a4, f, principal.idempotent, e)),
        si.group_coeffs));
  }
  CHECK(rank(stack(f, rows, t.size())) == 3);
}

TEST_CASE("source permutation modules") {
  const Field& f = Field::get(2, 2);
  auto a5 = PermGroup::alternating(5);
  auto blocks = block_decomposition(a5, f);
  auto m1 = source_permutation_module(blocks[0], 1);
  CHECK(is_representation(m1));
  CHECK(summand_dims(m1) == std::vector<std::size_t>{1, 5, 5});
  auto m2 = source_permutation_module(blocks[0], 7);
  CHECK(is_isomorphic(m1, m2));
  auto v4 = PermGroup::klein4();
  auto b4 = block_decomposition(v4, f);
  REQUIRE(b4.size() == 1);
  auto end = endomorphism_algebra(source_permutation_module(b4[0]));
  CHECK(end.dim() == 1);
}

TEST_CASE("block sylow modules and counts") {
  const Field& f = Field::get(5);
  auto s5 = PermGroup::symmetric(5);
  auto blocks = block_decomposition(s5, f);
  auto m = block_sylow_module(blocks[0]);
  CHECK(m.dim() * 5 == 70 * 1);
  CHECK(m.dim() == 14);
  auto s = sylow_for(blocks[0]);
  CHECK(gamma_count(blocks[0], s) == endomorphism_algebra(m).dim());
  CHECK(num_simples(blocks[0]) == 4);
  CHECK(num_simples(blocks[1]) == 1);
  CHECK(!nilpotent_hint(blocks[0]));
  auto c3 = block_decomposition(PermGroup::cyclic(3), Field::get(3));
  CHECK(nilpotent_hint(c3[0]));
  CHECK(num_simples(c3[0]) == 1);
}

TEST_CASE("brauer correspondents") {
  const Field& f = Field::get(5);
  auto s5 = PermGroup::symmetric(5);
  auto blocks = block_decomposition(s5, f);
  auto bc = brauer_correspondent(blocks[0]);
  CHECK(bc.normalizer.order() == 20);
  CHECK(bc.block.is_principal);
  CHECK(defect_group(bc.block).order() == 5);
  CHECK(num_simples(bc.block) == num_simples(blocks[0]));
}
