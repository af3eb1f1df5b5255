#include "doctest.h"

#include <algorithm>

#include "blockperm/brauertree.hpp"

using namespace blockperm;

namespace {

std::vector<std::vector<int>> label_orbits(const RhoSigma& rs,
                                           const std::vector<std::size_t>& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& o : permutation_orbits(perm)) {
    std::vector<int> l;
    for (auto x : o) l.push_back(rs.labels[x]);
    std::sort(l.begin(), l.end());
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rho and sigma on basic trees") {
  auto star = rho_sigma(BrauerTree::star(4));
  CHECK(permutation_orbits(star.rho).size() == 1);
  CHECK(permutation_orbits(star.sigma).size() == 4);
  auto one = rho_sigma(BrauerTree::line(1));
  CHECK(one.rho == std::vector<std::size_t>{0});
  CHECK(one.sigma == std::vector<std::size_t>{0});
  auto line = rho_sigma(BrauerTree::line(6));
  CHECK(label_orbits(line, line.rho) ==
        std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}, {6}});
  CHECK(label_orbits(line, line.sigma) ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}});
}

TEST_CASE("random trees") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    auto tree = BrauerTree::random(1 + static_cast<int>(rng() % 8), rng);
    RhoSigma rs;
    REQUIRE_NOTHROW(rs = rho_sigma(tree));
    const std::size_t n = rs.labels.size();
    // edge i is the only common element of its two orbits
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> in_rho(n, false);
      for (auto x = rs.rho[i];; x = rs.rho[x]) {
        in_rho[x] = true;
        if (x == i) break;
      }
      std::size_t common = 0;
      for (auto x = rs.sigma[i];; x = rs.sigma[x]) {
        if (in_rho[x]) ++common;
        if (x == i) break;
      }
      CHECK(common == 1);
    }
  }
}

TEST_CASE("malformed trees are rejected") {
  BrauerTree t;
  CHECK_THROWS(t.validate());
  t.vertices = {{0, {1}}, {1, {1, 2}}, {2, {2}}, {3, {}}};
  CHECK_THROWS(t.validate());
  t.vertices = {{0, {1, 2}}, {1, {1, 2}}};
  CHECK_THROWS(t.validate());
  t = BrauerTree::line(2);
  t.exceptional = BrauerTree::Exceptional{9, 3};
  CHECK_THROWS(t.validate());
  t.exceptional = BrauerTree::Exceptional{1, 1};
  CHECK_THROWS(t.validate());
  CHECK_THROWS(projective_loewy(BrauerTree::line(3), 7));
}

TEST_CASE("projective loewy layers") {
  auto line = BrauerTree::line(6);
  CHECK(projective_loewy(line, 1) == std::vector<std::vector<int>>{{1}, {2}, {1}});
  CHECK(projective_loewy(line, 3) == std::vector<std::vector<int>>{{3}, {2, 4}, {3}});
  CHECK(projective_loewy(line, 6) == std::vector<std::vector<int>>{{6}, {5}, {6}});
  CHECK(projective_loewy(BrauerTree::line(1), 1) == std::vector<std::vector<int>>{{1}, {1}});
  const Field& f = Field::get(5);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto star = BrauerTree::star(n, m);
      for (int e = 1; e <= n; ++e) {
        auto layers = projective_loewy(star, e);
        CHECK(layers.size() == static_cast<std::size_t>(m * n + 1));
        for (const auto& l : layers) CHECK(l.size() == 1);
      }
      // oracle: the symmetric Nakayama algebra with these projectives
      auto sh = algebra_shape(cyclic_nakayama(f, n, m * n + 1));
      for (const auto& p : sh.loewy) CHECK(p.size() == static_cast<std::size_t>(m * n + 1));
    }
}

TEST_CASE("endomorphism descriptors") {
  auto d = end_of_U_sum(BrauerTree::line(6));
  REQUIRE(d.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto& x : d) {
    sizes.push_back(x.num_simples);
    CHECK(x.proj_length == x.num_simples);
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2});
  auto s = end_of_U_sum(BrauerTree::star(3, 2));
  REQUIRE(s.size() == 1);
  CHECK(s[0].num_simples == 3);
  CHECK(s[0].proj_length == 6);
  auto e = end_of_U_sum(BrauerTree::line(1));
  REQUIRE(e.size() == 1);
  CHECK(algebra_of_descriptor(e[0], Field::get(3)).dim() == 1);
}

TEST_CASE("descriptor algebras are self-injective") {
  const Field& f = Field::get(7);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t len = 1; len <= 4; ++len) {
      NakayamaDescriptor d{n, len, {}};
      auto a = algebra_of_descriptor(d, f);
      CHECK(a.dim() == n * len);
      CHECK(is_self_injective(a).self_injective);
      CHECK(is_symmetric(a).symmetric == descriptor_is_symmetric(d));
    }
  NakayamaDescriptor n22{2, 2, {}};
  CHECK(algebra_of_descriptor(n22, f).dim() == 4);
  CHECK(!descriptor_is_symmetric(n22));
  CHECK(!descriptor_is_symmetric({3, 3, {}}));
}
