#include "blockperm/permgrp.hpp"

#include "blockperm/field.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace blockperm {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x])
      throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x >= degree) throw ParseError("cycle point out of range");
      if (used[x]) throw ParseError("point repeated in cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  }
  return Perm(std::move(img));
}

Perm Perm::parse_cycles(std::size_t degree, std::string_view s,
                        bool one_based) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
  };
  skip();
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in cycle string");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip();
      if (i >= s.size()) throw ParseError("unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      if (ec != std::errc()) throw ParseError("bad point in cycle string");
      i = static_cast<std::size_t>(ptr - s.data());
      if (one_based) {
        if (v == 0) throw ParseError("cycle points are 1-based");
        --v;
      }
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm& b) const {
  if (img_.size() != b.img_.size())
    throw DimensionMismatch("permutation degrees differ");
  std::vector<Point> r(img_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = img_[b.img_[i]];
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[img_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long long n) const {
  Perm base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n)
                               : static_cast<unsigned long long>(n);
  Perm r(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (auto c : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(c));
  return o;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Perm::cycle_string(bool one_based) const {
  std::vector<bool> seen(img_.size(), false);
  std::string s;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) s += ' ';
      s += std::to_string(j + (one_based ? 1 : 0));
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- cap

namespace {

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{[] {
    std::size_t c = 10080;
    if (const char* env = std::getenv("BLOCKPERM_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) c = static_cast<std::size_t>(v);
    }
    return c;
  }()};
  return cap;
}

}  // namespace

std::size_t enumeration_cap() { return cap_storage().load(); }
void set_enumeration_cap(std::size_t cap) { cap_storage().store(cap); }

std::uint32_t ElementTable::index_of(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw NotASubgroup("element not in group");
  return it->second;
}

// ---------------------------------------------------------------- chain

struct PermGroup::Chain {
  struct Level {
    Point base;
    std::vector<Perm> gens;
    std::vector<int> where;  // point -> index into reps, -1 if not in orbit
    std::vector<Perm> reps;  // reps[k][base] = orbit[k]
    std::vector<Point> orbit;
  };
  std::size_t degree = 0;
  std::vector<Level> levels;

  void rebuild_orbit(Level& l) const {
    l.where.assign(degree, -1);
    l.reps.clear();
    l.orbit.clear();
    l.where[l.base] = 0;
    l.reps.push_back(Perm(degree));
    l.orbit.push_back(l.base);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (const auto& s : l.gens) {
        Point y = s[l.orbit[k]];
        if (l.where[y] >= 0) continue;
        l.where[y] = static_cast<int>(l.reps.size());
        l.reps.push_back(s * l.reps[k]);
        l.orbit.push_back(y);
      }
    }
  }

  // Returns residue and the level where sifting stopped (levels.size() if
  // it passed through every level).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const Level& l = levels[i];
      Point b = g[l.base];
      if (l.where[b] < 0) return {g, i};
      g = l.reps[l.where[b]].inverse() * g;
    }
    return {g, levels.size()};
  }

  static Point moved_point(const Perm& g) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (g[i] != i) return static_cast<Point>(i);
    return 0;
  }

  void build(const std::vector<Perm>& gens) {
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      bool fixes_all = true;
      for (const auto& l : levels)
        if (g[l.base] != l.base) fixes_all = false;
      if (fixes_all) {
        Level l;
        l.base = moved_point(g);
        levels.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (const auto& g : gens) {
        if (g.is_identity()) continue;
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j)
          if (g[levels[j].base] != levels[j].base) fixes = false;
        if (fixes) levels[i].gens.push_back(g);
      }
      rebuild_orbit(levels[i]);
    }
    std::size_t i = levels.size();
    while (i-- > 0) {
      bool restarted = false;
      Level& l = levels[i];
      for (std::size_t k = 0; !restarted && k < l.orbit.size(); ++k) {
        for (std::size_t s = 0; !restarted && s < l.gens.size(); ++s) {
          const Perm& gen = l.gens[s];
          const Perm& u = l.reps[k];
          Point img = gen[l.orbit[k]];
          Perm h = levels[i].reps[levels[i].where[img]].inverse() * gen * u;
          auto [res, j] = sift(h, i + 1);
          if (res.is_identity()) continue;
          if (j == levels.size()) {
            Level nl;
            nl.base = moved_point(res);
            levels.push_back(std::move(nl));
          }
          for (std::size_t t = i + 1; t <= j; ++t) {
            levels[t].gens.push_back(res);
            rebuild_orbit(levels[t]);
          }
          i = j + 1;  // the loop decrement lands on level j
          restarted = true;
        }
      }
    }
  }
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DimensionMismatch("generator degree differs from group degree");
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n <= 1) return trivial(n);
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n > 2) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n <= 2) return trivial(n);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    // (0 1 2) with an n-cycle (n odd) or an (n-1)-cycle fixing 0 (n even)
    std::vector<Point> cyc;
    for (Point k = (n % 2 == 0) ? 1 : 0; k < n; ++k) cyc.push_back(k);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n <= 1) return trivial(n);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {});
}

PermGroup PermGroup::klein4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                       Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(cache_->chain_once, [this] {
    auto c = std::make_shared<Chain>();
    c->degree = degree_;
    c->build(gens_);
    cache_->chain = std::move(c);
  });
  return *cache_->chain;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& l : chain().levels) o *= l.orbit.size();
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return chain().sift(p, 0).first.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (g.degree_ != degree_) return false;
  for (const auto& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::is_p_group(unsigned p) const {
  std::uint64_t o = order();
  while (o % p == 0) o /= p;
  return o == 1;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens_) {
      Point y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : chain().levels) b.push_back(l.base);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& l : chain().levels) s.push_back(l.orbit.size());
  return s;
}

const ElementTable& PermGroup::elements() const {
  std::uint64_t n = order();
  if (n > enumeration_cap()) throw CapExceeded("group", n, enumeration_cap());
  std::call_once(cache_->elems_once, [this] {
    auto t = std::make_unique<ElementTable>();
    std::vector<Perm> bfs{Perm(degree_)};
    std::vector<std::uint32_t> par{0}, gen{0};
    std::unordered_map<Perm, std::uint32_t, PermHash> seen;
    seen.emplace(bfs[0], 0);
    for (std::size_t k = 0; k < bfs.size(); ++k) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        Perm y = gens_[s] * bfs[k];
        if (seen.count(y)) continue;
        seen.emplace(y, static_cast<std::uint32_t>(bfs.size()));
        bfs.push_back(std::move(y));
        par.push_back(static_cast<std::uint32_t>(k));
        gen.push_back(static_cast<std::uint32_t>(s));
      }
    }
    std::vector<std::uint32_t> order(bfs.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return bfs[a] < bfs[b]; });
    std::vector<std::uint32_t> new_index(bfs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;
    t->elems.resize(bfs.size());
    t->parent.resize(bfs.size());
    t->gen.resize(bfs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      t->elems[i] = bfs[order[i]];
      t->parent[i] = new_index[par[order[i]]];
      t->gen[i] = gen[order[i]];
    }
    for (std::uint32_t k = 0; k < bfs.size(); ++k)
      t->bfs_order.push_back(new_index[k]);
    for (std::uint32_t i = 0; i < t->elems.size(); ++i)
      t->index.emplace(t->elems[i], i);
    t->identity = new_index[0];
    t->inverse.resize(t->elems.size());
    for (std::uint32_t i = 0; i < t->elems.size(); ++i)
      t->inverse[i] = t->index.at(t->elems[i].inverse());
    cache_->elems = std::move(t);
  });
  return *cache_->elems;
}

const ConjugacyClasses& PermGroup::conjugacy_classes() const {
  const ElementTable& t = elements();
  std::call_once(cache_->classes_once, [this, &t] {
    auto cc = std::make_unique<ConjugacyClasses>();
    const std::uint32_t none = UINT32_MAX;
    cc->class_of.assign(t.size(), none);
    std::vector<Perm> ginv;
    for (const auto& g : gens_) ginv.push_back(g.inverse());
    for (std::uint32_t x = 0; x < t.size(); ++x) {
      if (cc->class_of[x] != none) continue;
      std::uint32_t id = static_cast<std::uint32_t>(cc->reps.size());
      std::vector<std::uint32_t> mem{x};
      cc->class_of[x] = id;
      for (std::size_t k = 0; k < mem.size(); ++k) {
        for (std::size_t s = 0; s < gens_.size(); ++s) {
          std::uint32_t y = t.index_of(gens_[s] * t.elems[mem[k]] * ginv[s]);
          if (cc->class_of[y] != none) continue;
          cc->class_of[y] = id;
          mem.push_back(y);
        }
      }
      std::sort(mem.begin(), mem.end());
      cc->reps.push_back(x);
      cc->members.push_back(std::move(mem));
    }
    cache_->classes = std::move(cc);
  });
  return *cache_->classes;
}

// ---------------------------------------------------------------- subgroups

std::vector<std::uint32_t> element_indices(const PermGroup& g,
                                           const PermGroup& h) {
  if (h.degree() != g.degree()) throw NotASubgroup("degree mismatch");
  const ElementTable& tg = g.elements();
  const ElementTable& th = h.elements();
  std::vector<std::uint32_t> idx;
  idx.reserve(th.size());
  for (const auto& x : th.elems) {
    auto it = tg.index.find(x);
    if (it == tg.index.end()) throw NotASubgroup("element outside ambient group");
    idx.push_back(it->second);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

namespace {

// Closure in g of `members` (a subgroup) with the extra element x, updating
// the membership mask.
void close_with(const ElementTable& t, std::vector<std::uint32_t>& members,
                std::vector<char>& mask, const std::vector<Perm>& gens) {
  for (std::size_t k = 0; k < members.size(); ++k)
    for (const auto& s : gens) {
      std::uint32_t y = t.index_of(s * t.elems[members[k]]);
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
}

}  // namespace

PermGroup subgroup_generated(const PermGroup& g,
                             const std::vector<std::uint32_t>& idx) {
  const ElementTable& t = g.elements();
  std::vector<char> mask(t.size(), 0);
  std::vector<std::uint32_t> members{t.identity};
  mask[t.identity] = 1;
  std::vector<Perm> gens;
  std::vector<std::uint32_t> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t x : sorted) {
    if (mask[x]) continue;
    gens.push_back(t.elems[x]);
    // everything reachable from current members under the new generating set
    std::vector<std::uint32_t> all = members;
    close_with(t, all, mask, gens);
    members = std::move(all);
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup subgroup_from_elements(const PermGroup& g,
                                 const std::vector<std::uint32_t>& idx) {
  PermGroup h = subgroup_generated(g, idx);
  if (h.order() != idx.size())
    throw NotASubgroup("element set is not closed under multiplication");
  return h;
}

std::uint64_t legendre_valuation(std::uint64_t n, unsigned p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

PermGroup sylow_of_symmetric(std::size_t n, unsigned p) {
  if (!is_prime(p)) throw Error("sylow_of_symmetric: p is not prime");
  std::vector<Perm> gens;
  std::size_t offset = 0;
  std::size_t m = n;
  std::vector<std::size_t> digits;
  while (m) {
    digits.push_back(m % p);
    m /= p;
  }
  for (std::size_t k = digits.size(); k-- > 0;) {
    std::size_t block = 1;
    for (std::size_t j = 0; j < k; ++j) block *= p;
    for (std::size_t c = 0; c < digits[k]; ++c) {
      // iterated wreath product on points offset .. offset+block-1
      for (std::size_t lvl = 1, sz = p; lvl <= k; ++lvl, sz *= p) {
        std::vector<Point> img(n);
        std::iota(img.begin(), img.end(), Point{0});
        const std::size_t sub = sz / p;
        for (std::size_t x = 0; x < sz; ++x)
          img[offset + x] = static_cast<Point>(offset + (x + sub) % sz);
        gens.emplace_back(std::move(img));
      }
      offset += block;
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  const ElementTable& t = g.elements();
  std::vector<char> inh(t.size(), 0);
  for (auto i : element_indices(g, h)) inh[i] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    const Perm& px = t.elems[x];
    const Perm& pinv = t.elems[t.inverse[x]];
    bool ok = true;
    for (const auto& s : h.generators())
      if (!inh[t.index_of(px * s * pinv)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return subgroup_from_elements(g, out);
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  const ElementTable& t = g.elements();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    bool ok = true;
    for (const auto& s : h.generators())
      if (t.elems[x] * s != s * t.elems[x]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return subgroup_from_elements(g, out);
}

PermGroup intersection(const PermGroup& g, const PermGroup& a,
                       const PermGroup& b) {
  auto ia = element_indices(g, a);
  auto ib = element_indices(g, b);
  std::vector<std::uint32_t> both;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                        std::back_inserter(both));
  return subgroup_from_elements(g, both);
}

PermGroup conjugate(const PermGroup& h, const Perm& x) {
  Perm xi = x.inverse();
  std::vector<Perm> gens;
  for (const auto& s : h.generators()) gens.push_back(x * s * xi);
  return PermGroup(h.degree(), std::move(gens));
}

bool are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                   Perm* witness) {
  if (a.order() != b.order()) return false;
  const ElementTable& t = g.elements();
  std::vector<char> inb(t.size(), 0);
  for (auto i : element_indices(g, b)) inb[i] = 1;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    const Perm& px = t.elems[x];
    const Perm& pinv = t.elems[t.inverse[x]];
    bool ok = true;
    for (const auto& s : a.generators())
      if (!inb[t.index_of(px * s * pinv)]) {
        ok = false;
        break;
      }
    if (ok) {
      if (witness) *witness = px;
      return true;
    }
  }
  return false;
}

PermGroup sylow_subgroup(const PermGroup& g, unsigned p) {
  const ElementTable& t = g.elements();
  std::uint64_t target = 1;
  for (std::uint64_t o = g.order(); o % p == 0; o /= p) target *= p;
  std::vector<std::uint32_t> cur{t.identity};
  PermGroup q = PermGroup::trivial(g.degree());
  while (q.order() < target) {
    std::vector<char> inq(t.size(), 0);
    for (auto i : cur) inq[i] = 1;
    PermGroup n = normalizer(g, q);
    bool grown = false;
    for (auto x : element_indices(g, n)) {
      if (inq[x]) continue;
      if (!inq[t.index_of(t.elems[x].pow(p))]) continue;
      std::vector<std::uint32_t> gen = cur;
      gen.push_back(x);
      q = subgroup_generated(g, gen);
      cur = element_indices(g, q);
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow_subgroup: failed to extend p-subgroup");
  }
  return q;
}

std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& p,
                                       const PermGroup& q) {
  if (!p.is_subgroup_of(g)) throw NotASubgroup("double_cosets: P not in G");
  if (!q.is_subgroup_of(g)) throw NotASubgroup("double_cosets: Q not in G");
  const ElementTable& t = g.elements();
  const auto& pe = p.elements().elems;
  const auto& qe = q.elements().elems;
  std::vector<char> mark(t.size(), 0);
  std::vector<DoubleCoset> out;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (mark[x]) continue;
    std::uint64_t size = 0;
    for (const auto& a : pe) {
      Perm ax = a * t.elems[x];
      for (const auto& b : qe) {
        std::uint32_t y = t.index_of(ax * b);
        if (!mark[y]) {
          mark[y] = 1;
          ++size;
        }
      }
    }
    out.push_back({t.elems[x], size});
  }
  return out;
}

namespace {

// Conjugation-invariant fingerprint of a subgroup: order plus sorted
// multiset of element cycle types.
std::vector<std::size_t> subgroup_fingerprint(const PermGroup& h) {
  std::vector<std::vector<std::size_t>> types;
  for (const auto& x : h.elements().elems) types.push_back(x.cycle_type());
  std::sort(types.begin(), types.end());
  std::vector<std::size_t> fp{static_cast<std::size_t>(h.order())};
  for (const auto& ct : types) {
    fp.push_back(ct.size());
    fp.insert(fp.end(), ct.begin(), ct.end());
  }
  return fp;
}

}  // namespace

SubgroupClassList p_subgroups_up_to_conjugacy(const PermGroup& g, unsigned p) {
  if (!is_prime(p)) throw Error("p_subgroups: p is not prime");
  const ElementTable& t = g.elements();
  SubgroupClassList out;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_fp;
  auto add_class = [&](const PermGroup& h) {
    auto fp = subgroup_fingerprint(h);
    auto& bucket = by_fp[fp];
    for (auto k : bucket)
      if (are_conjugate(g, h, out.reps[k])) return false;
    bucket.push_back(out.reps.size());
    out.reps.push_back(h);
    out.class_sizes.push_back(g.order() / normalizer(g, h).order());
    return true;
  };
  add_class(PermGroup::trivial(g.degree()));
  std::size_t level_begin = 0;
  while (level_begin < out.reps.size()) {
    std::size_t level_end = out.reps.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      PermGroup q = out.reps[k];
      auto qidx = element_indices(g, q);
      std::vector<char> inq(t.size(), 0);
      for (auto i : qidx) inq[i] = 1;
      std::vector<char> covered(t.size(), 0);
      PermGroup n = normalizer(g, q);
      for (auto x : element_indices(g, n)) {
        if (inq[x] || covered[x]) continue;
        if (!inq[t.index_of(t.elems[x].pow(p))]) continue;
        std::vector<std::uint32_t> gen = qidx;
        gen.push_back(x);
        PermGroup r = subgroup_generated(g, gen);
        auto ridx = element_indices(g, r);
        for (auto y : ridx) covered[y] = 1;
        // canonical generators keep downstream output deterministic
        add_class(subgroup_generated(g, ridx));
      }
    }
    level_begin = level_end;
  }
  // stable order: by group order, then discovery
  std::vector<std::size_t> perm(out.reps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return out.reps[a].order() < out.reps[b].order();
  });
  SubgroupClassList sorted;
  for (auto i : perm) {
    sorted.reps.push_back(out.reps[i]);
    sorted.class_sizes.push_back(out.class_sizes[i]);
  }
  return sorted;
}

CosetTable left_cosets(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("left_cosets: H not in G");
  std::uint64_t index = g.order() / h.order();
  if (index > enumeration_cap()) throw CapExceeded("coset space", index, enumeration_cap());
  const ElementTable& t = g.elements();
  const auto& he = h.elements().elems;
  CosetTable ct;
  const std::uint32_t none = UINT32_MAX;
  ct.coset_of.assign(t.size(), none);
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (ct.coset_of[x] != none) continue;
    std::uint32_t id = static_cast<std::uint32_t>(ct.reps.size());
    ct.reps.push_back(x);
    for (const auto& y : he) ct.coset_of[t.index_of(t.elems[x] * y)] = id;
  }
  for (const auto& s : g.generators()) {
    std::vector<Point> img(ct.reps.size());
    for (std::size_t c = 0; c < ct.reps.size(); ++c)
      img[c] = ct.coset_of[t.index_of(s * t.elems[ct.reps[c]])];
    ct.gen_images.push_back(std::move(img));
  }
  return ct;
}

PermGroup coset_action(const PermGroup& g, const PermGroup& h,
                       const CosetTable& t) {
  (void)h;
  std::vector<Perm> gens;
  for (const auto& img : t.gen_images) gens.emplace_back(img);
  (void)g;
  return PermGroup(t.size(), std::move(gens));
}

}  // namespace blockperm
