#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "blockperm/permgrp.hpp"

using namespace blockperm;

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// brute-force stabilizer size of a point
std::size_t stabilizer_size(const PermGroup& g, Point x) {
  std::size_t n = 0;
  for (const auto& e : g.elements().elems)
    if (e[x] == x) ++n;
  return n;
}

}  // namespace

TEST_CASE("group orders") {
  PermGroup s7(7, {Perm::from_cycles(7, {{0, 1}}),
                   Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})});
  CHECK(s7.order() == 5040);
  CHECK(PermGroup::cyclic(7).order() == 7);
  PermGroup a4(4, {Perm::from_cycles(4, {{0, 1, 2}}),
                   Perm::from_cycles(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  for (unsigned n = 1; n <= 9; ++n) {
    CHECK(PermGroup::symmetric(n).order() == factorial(n));
    CHECK(PermGroup::alternating(n).order() == (n < 2 ? 1 : factorial(n) / 2));
  }
  CHECK(PermGroup::klein4().order() == 4);
  // two orderings agree when materialized
  CHECK(s7.elements().size() == 5040);
  CHECK(PermGroup::alternating(6).elements().size() == 360);
}

TEST_CASE("membership and subgroups") {
  auto s5 = PermGroup::symmetric(5);
  auto a5 = PermGroup::alternating(5);
  CHECK(a5.is_subgroup_of(s5));
  CHECK_FALSE(s5.is_subgroup_of(a5));
  CHECK(a5.contains(Perm::from_cycles(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a5.contains(Perm::from_cycles(5, {{0, 1}})));
}

TEST_CASE("cycle notation parsing is 1-based") {
  Perm p = Perm::parse_cycles(5, "(1 2 3)(4 5)");
  CHECK(p == Perm::from_cycles(5, {{0, 1, 2}, {3, 4}}));
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(p.order() == 6);
  CHECK_THROWS_AS(Perm::parse_cycles(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles(3, "1 2"), ParseError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), Error);
}

TEST_CASE("sylow subgroups of symmetric groups") {
  CHECK(sylow_of_symmetric(7, 7).order() == 7);
  auto d8 = sylow_of_symmetric(4, 2);
  CHECK(d8.order() == 8);
  CHECK(d8.is_subgroup_of(PermGroup::symmetric(4)));
  CHECK(sylow_of_symmetric(9, 3).order() == 81);
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      auto s = sylow_of_symmetric(n, p);
      CHECK(s.order() == ipow(p, legendre_valuation(n, p)));
      CHECK(s.is_p_group(p));
    }
  CHECK_THROWS_AS(sylow_of_symmetric(5, 4), Error);
}

TEST_CASE("generic sylow subgroup") {
  auto a5 = PermGroup::alternating(5);
  CHECK(sylow_subgroup(a5, 2).order() == 4);
  CHECK(sylow_subgroup(a5, 5).order() == 5);
  CHECK(sylow_subgroup(PermGroup::symmetric(6), 3).order() == 9);
}

TEST_CASE("double cosets") {
  auto s3 = PermGroup::symmetric(3);
  auto dc = double_cosets(s3, s3, s3);
  REQUIRE(dc.size() == 1);
  CHECK(dc[0].size == 6);
  PermGroup c2(3, {Perm::from_cycles(3, {{0, 1}})});
  auto d = double_cosets(s3, c2, c2);
  REQUIRE(d.size() == 2);
  std::multiset<std::uint64_t> sizes{d[0].size, d[1].size};
  CHECK(sizes == std::multiset<std::uint64_t>{2, 4});
  CHECK_THROWS_AS(double_cosets(c2, s3, c2), NotASubgroup);
}

TEST_CASE("burnside counting and double coset sizes on random triples") {
  std::mt19937_64 rng(5);
  std::vector<PermGroup> ambient{PermGroup::symmetric(4), PermGroup::symmetric(5),
                                 PermGroup::alternating(5), PermGroup::symmetric(6),
                                 PermGroup::symmetric(7)};
  for (int trial = 0; trial < 20; ++trial) {
    const PermGroup& g = ambient[trial % ambient.size()];
    const auto& t = g.elements();
    auto random_sub = [&] {
      std::vector<std::uint32_t> gens{static_cast<std::uint32_t>(rng() % t.size())};
      if (rng() % 2) gens.push_back(static_cast<std::uint32_t>(rng() % t.size()));
      return subgroup_generated(g, gens);
    };
    PermGroup p = random_sub(), q = random_sub();
    if (p.order() * q.order() > 4000 && g.order() == 5040) continue;
    auto dc = double_cosets(g, p, q);
    std::uint64_t total = 0;
    for (const auto& d : dc) {
      total += d.size;
      PermGroup qx = conjugate(q, d.rep);
      std::uint64_t inter = intersection(g, p, qx).order();
      CHECK(d.size == p.order() * q.order() / inter);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("p-subgroup classes") {
  PermGroup a4(4, {Perm::from_cycles(4, {{0, 1, 2}}),
                   Perm::from_cycles(4, {{1, 2, 3}})});
  auto c = p_subgroups_up_to_conjugacy(a4, 2);
  REQUIRE(c.reps.size() == 3);
  CHECK(c.reps[0].order() == 1);
  CHECK(c.reps[1].order() == 2);
  CHECK(c.reps[2].order() == 4);
  CHECK(c.class_sizes == std::vector<std::uint64_t>{1, 3, 1});

  auto s3c = p_subgroups_up_to_conjugacy(PermGroup::symmetric(3), 3);
  REQUIRE(s3c.reps.size() == 2);
  CHECK(s3c.reps[1].order() == 3);
  auto c7 = p_subgroups_up_to_conjugacy(PermGroup::cyclic(7), 7);
  CHECK(c7.reps.size() == 2);

  // S_4 has 11 conjugacy classes of subgroups, 7 of them 2-groups:
  // 1, <(12)>, <(12)(34)>, V4 normal, V4 non-normal, C4, D8
  auto s4 = p_subgroups_up_to_conjugacy(PermGroup::symmetric(4), 2);
  CHECK(s4.reps.size() == 7);
  for (std::size_t i = 0; i < s4.reps.size(); ++i)
    for (std::size_t j = i + 1; j < s4.reps.size(); ++j)
      CHECK_FALSE(are_conjugate(PermGroup::symmetric(4), s4.reps[i], s4.reps[j]));
  std::uint64_t sum = 0;
  for (auto s : s4.class_sizes) sum += s;
  // 1 + 6 + 3 + 1 + 3 + 3 + 3 two-subgroups in S_4
  CHECK(sum == 20);
}

TEST_CASE("normalizers and centralizers") {
  auto s7 = PermGroup::symmetric(7);
  auto c7 = sylow_of_symmetric(7, 7);
  CHECK(normalizer(s7, c7).order() == 42);
  CHECK(centralizer(s7, c7).order() == 7);
  PermGroup a4(4, {Perm::from_cycles(4, {{0, 1, 2}}),
                   Perm::from_cycles(4, {{1, 2, 3}})});
  PermGroup c3(4, {Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK(normalizer(a4, c3).order() == 3);
}

TEST_CASE("orbit-stabilizer and class closure") {
  for (const auto& g : {PermGroup::symmetric(5), PermGroup::alternating(5),
                        PermGroup::klein4(), sylow_of_symmetric(6, 2)}) {
    for (Point x = 0; x < g.degree(); ++x)
      CHECK(g.orbit(x).size() * stabilizer_size(g, x) == g.order());
    const auto& cc = g.conjugacy_classes();
    const auto& t = g.elements();
    std::size_t total = 0;
    for (std::size_t c = 0; c < cc.reps.size(); ++c) {
      total += cc.members[c].size();
      for (const auto& s : g.generators()) {
        auto y = t.index_of(s * t.elems[cc.reps[c]] * s.inverse());
        CHECK(cc.class_of[y] == c);
      }
    }
    CHECK(total == g.order());
  }
  CHECK(PermGroup::symmetric(7).conjugacy_classes().reps.size() == 15);
}

TEST_CASE("enumeration cap") {
  auto s8 = PermGroup::symmetric(8);
  CHECK(s8.order() == 40320);
  CHECK_THROWS_AS(s8.elements(), CapExceeded);
}

TEST_CASE("left cosets") {
  auto s4 = PermGroup::symmetric(4);
  auto d8 = sylow_of_symmetric(4, 2);
  auto ct = left_cosets(s4, d8);
  CHECK(ct.size() == 3);
  auto act = coset_action(s4, d8, ct);
  CHECK(act.order() == 6);
}
