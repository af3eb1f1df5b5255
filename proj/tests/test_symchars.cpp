#include "doctest.h"

#include <functional>
#include <set>

#include "blockperm/symchars.hpp"

using namespace blockperm;

namespace {

PermGroup cyclic_on(int n) {
  std::vector<Point> img(n);
  for (int k = 0; k < n; ++k) img[k] = static_cast<Point>((k + 1) % n);
  return PermGroup(n, {Perm(img)});
}

// every core reachable by removing rim hooks in any order, computed on the
// Young diagram directly (cells as (row, col))
std::set<Partition> all_cores(const Partition& lambda, int p) {
  std::set<Partition> out;
  std::function<void(const Partition&)> rec = [&](const Partition& l) {
    bool any = false;
    // a rim hook of length p: a connected skew strip on the boundary; test
    // each candidate by removing p boundary cells walking from a row end
    const int rows = static_cast<int>(l.size());
    for (int r = 0; r < rows; ++r) {
      // start at the end of row r and walk down-left along the rim
      Partition m = l;
      int row = r, removed = 0;
      bool ok = true;
      while (removed < p) {
        if (row >= rows || m[row] == 0) { ok = false; break; }
        const int next = row + 1 < rows ? l[row + 1] : 0;
        const int take = std::min(p - removed, m[row] - std::max(next - 1, 0));
        if (take <= 0) { ok = false; break; }
        m[row] -= take;
        removed += take;
        if (removed < p) {
          // continue into the next row only if the strip stays connected
          if (m[row] != std::max(next - 1, 0) || next == 0) { ok = false; break; }
          ++row;
        }
      }
      if (!ok) continue;
      // result must be a partition
      bool part = true;
      for (int i = 1; i < rows; ++i)
        if (m[i] > m[i - 1]) part = false;
      if (!part) continue;
      Partition n;
      for (int x : m)
        if (x > 0) n.push_back(x);
      any = true;
      rec(n);
    }
    if (!any) out.insert(l);
  };
  rec(lambda);
  return out;
}

}  // namespace

TEST_CASE("partitions and strings") {
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(5).front() == Partition{5});
  CHECK(partition_string({5, 1, 1}) == "5,1,1");
  CHECK(parse_partition("3,2,2") == Partition{3, 2, 2});
  CHECK_THROWS(parse_partition("2,3"));
  CHECK_THROWS(parse_partition("2,x"));
  CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
  CHECK(hook_partition(7, 2) == Partition{5, 1, 1});
}

TEST_CASE("trivial and sign characters") {
  for (const auto& mu : partitions(6)) {
    CHECK(mn_value({6}, mu) == 1);
    int odd = 0;
    for (int x : mu) odd += (x - 1) % 2;
    CHECK(mn_value({1, 1, 1, 1, 1, 1}, mu) == (odd % 2 ? -1 : 1));
  }
  CHECK_THROWS(mn_value({3}, {2, 1, 1}));
}

TEST_CASE("hooks on the p-cycle") {
  for (int p : {3, 5, 7, 11})
    for (int i = 0; i < p; ++i) CHECK(mn_value(hook_partition(p, i), {p}) == (i % 2 ? -1 : 1));
}

TEST_CASE("character tables are orthogonal") {
  for (int n = 1; n <= 7; ++n) {
    auto t = character_table(n);
    const std::size_t k = t.classes.size();
    std::int64_t order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    for (std::size_t a = 0; a < k; ++a) {
      CHECK(t.values[a][k - 1] == hook_degree(t.characters[a]));
      for (std::size_t b = 0; b < k; ++b) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < k; ++c)
          s += class_size(t.classes[c]) * t.values[a][c] * t.values[b][c];
        CHECK(s == (a == b ? order : 0));
        // column orthogonality
        std::int64_t col = 0;
        for (std::size_t r = 0; r < k; ++r) col += t.values[r][a] * t.values[r][b];
        CHECK(col == (a == b ? centralizer_order(t.classes[a]) : 0));
      }
    }
  }
  CHECK(hook_degree({4, 2, 1}) == 35);
  CHECK(class_size({2, 2, 1, 1, 1}) == 105);
}

TEST_CASE("p-cores") {
  CHECK(p_core({7}, 7).empty());
  // hook lengths 3, 1, 1: no 2-hook to remove
  CHECK(p_core({2, 1}, 2) == Partition{2, 1});
  CHECK(p_core({3, 1}, 2).empty());
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(same_block(hook_partition(7, i), hook_partition(7, j), 7));
  CHECK(!same_block({4, 3}, {7}, 7));
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions(n))
      for (int p : {2, 3, 5}) {
        auto cores = all_cores(l, p);
        REQUIRE(cores.size() == 1);
        CHECK(*cores.begin() == p_core(l, p));
      }
}

TEST_CASE("sylow multiplicities") {
  std::vector<std::int64_t> s7;
  for (int i = 0; i < 7; ++i) s7.push_back(sylow_multiplicity(7, i));
  CHECK(s7 == std::vector<std::int64_t>{1, 0, 3, 2, 3, 0, 1});
  CHECK(sylow_multiplicity(7, 2) == 3);
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int i = 0; i < p; ++i) CHECK(sylow_multiplicity(p, i) == sylow_multiplicity_brute(p, i));
  CHECK(!sylow_multiplicity_unweighted(7, 2).has_value());
  for (int i = 0; i < 7; ++i) CHECK(!sylow_multiplicity_unweighted(7, i).has_value());
  CHECK(sylow_multiplicity_unweighted(2, 0) == 1);
}

TEST_CASE("permutation character multiplicities") {
  auto c5 = perm_character_multiplicities(5, cyclic_on(5));
  std::vector<std::int64_t> hooks;
  for (int i = 0; i < 5; ++i) hooks.push_back(c5.at(hook_partition(5, i)));
  CHECK(hooks == std::vector<std::int64_t>{1, 0, 2, 0, 1});
  auto c7 = perm_character_multiplicities(7, cyclic_on(7));
  hooks.clear();
  for (int i = 0; i < 7; ++i) hooks.push_back(c7.at(hook_partition(7, i)));
  CHECK(hooks == std::vector<std::int64_t>{1, 0, 3, 2, 3, 0, 1});
  auto full = perm_character_multiplicities(5, PermGroup::symmetric(5));
  for (const auto& [l, m] : full) CHECK(m == (l == Partition{5} ? 1 : 0));
  for (const auto& h : {cyclic_on(6), PermGroup::alternating(6), sylow_of_symmetric(6, 2),
                        PermGroup::trivial(6)}) {
    std::int64_t total = 0;
    for (const auto& [l, m] : perm_character_multiplicities(6, h)) total += m * hook_degree(l);
    CHECK(total == 720 / static_cast<std::int64_t>(h.order()));
  }
  CHECK_THROWS(perm_character_multiplicities(7, cyclic_on(5)));
}
