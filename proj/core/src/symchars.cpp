#include "blockperm/symchars.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace blockperm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in character arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in character arithmetic");
  return r;
}

void validate(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw Error("partition parts must be positive");
    if (i && p[i] > p[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
}

// beta-numbers with exactly `len` beads
std::vector<int> beta_set(const Partition& p, std::size_t len) {
  std::vector<int> b(len);
  for (std::size_t i = 0; i < len; ++i) {
    int part = i < p.size() ? p[i] : 0;
    b[i] = part + static_cast<int>(len - 1 - i);
  }
  return b;  // strictly decreasing
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  Partition p;
  const std::size_t len = b.size();
  for (std::size_t i = 0; i < len; ++i) {
    int part = b[i] - static_cast<int>(len - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

// keyed by (shape, remaining cycle lengths)
using Memo = std::map<std::pair<Partition, Partition>, std::int64_t>;

std::int64_t mn_rec(const Partition& lambda, const Partition& mu, std::size_t k,
                    Memo& memo) {
  if (k == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, Partition(mu.begin() + static_cast<std::ptrdiff_t>(k), mu.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[k];
  std::vector<int> b = beta_set(lambda, lambda.size());
  std::set<int> beads(b.begin(), b.end());
  std::int64_t total = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const int from = b[j], to = b[j] - r;
    if (to < 0 || beads.count(to)) continue;
    // rim hook leg length = beads strictly between to and from
    int between = 0;
    for (int x : b)
      if (x > to && x < from) ++between;
    std::vector<int> nb = b;
    nb[j] = to;
    std::int64_t v = mn_rec(from_beta(nb), mu, k + 1, memo);
    total = checked_add(total, between % 2 ? -v : v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw Error("partitions: negative size");
  std::vector<Partition> out;
  Partition cur;
  // recursive generation with bounded largest part
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(rest, maxp); x >= 1; --x) {
      cur.push_back(x);
      self(self, rest - x, x);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string partition_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(std::string_view s) {
  Partition p;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad partition: " + std::string(s));
    p.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  validate(p);
  return p;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int count = 0;
    for (int x : p)
      if (x >= j) ++count;
    c.push_back(count);
  }
  return c;
}

Partition hook_partition(int n, int i) {
  if (i < 0 || i >= n) throw Error("hook_partition: leg out of range");
  Partition p{n - i};
  for (int k = 0; k < i; ++k) p.push_back(1);
  return p;
}

std::int64_t mn_value(const Partition& lambda, const Partition& mu) {
  validate(lambda);
  Partition m = mu;
  std::sort(m.rbegin(), m.rend());
  validate(m);
  if (partition_size(lambda) != partition_size(m))
    throw Error("mn_value: partition sizes differ");
  Memo memo;
  return mn_rec(lambda, m, 0, memo);
}

std::int64_t hook_degree(const Partition& lambda) {
  validate(lambda);
  const int n = partition_size(lambda);
  Partition c = conjugate_partition(lambda);
  // n! / prod hooks, accumulated as a fraction reduced at each step
  std::int64_t num = 1;
  for (int k = 2; k <= n; ++k) num = checked_mul(num, k);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      den = checked_mul(den, (lambda[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1);
  return num / den;
}

std::int64_t centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int x : mu) ++mult[x];
  std::int64_t z = 1;
  for (auto [part, m] : mult)
    for (int k = 1; k <= m; ++k) z = checked_mul(z, checked_mul(part, k));
  return z;
}

std::int64_t class_size(const Partition& mu) {
  std::int64_t f = 1;
  for (int k = 2; k <= partition_size(mu); ++k) f = checked_mul(f, k);
  return f / centralizer_order(mu);
}

CharacterTable character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.characters = partitions(n);
  t.classes = t.characters;
  for (const auto& l : t.characters) {
    std::vector<std::int64_t> row;
    Memo memo;
    for (const auto& m : t.classes) row.push_back(mn_rec(l, m, 0, memo));
    t.values.push_back(std::move(row));
  }
  return t;
}

Partition p_core(const Partition& lambda, int p) {
  validate(lambda);
  if (p < 1) throw Error("p_core: p must be positive");
  std::vector<int> b = beta_set(lambda, lambda.size());
  std::set<int> beads(b.begin(), b.end());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int x : std::vector<int>(beads.begin(), beads.end()))
      if (x - p >= 0 && !beads.count(x - p)) {
        beads.erase(x);
        beads.insert(x - p);
        moved = true;
      }
  }
  return from_beta(std::vector<int>(beads.begin(), beads.end()));
}

bool same_block(const Partition& a, const Partition& b, int p) {
  return partition_size(a) == partition_size(b) && p_core(a, p) == p_core(b, p);
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::int64_t sylow_multiplicity(int p, int i) {
  if (i < 0 || i > p - 1) throw Error("sylow_multiplicity: index out of range");
  std::int64_t num = binomial(p - 1, i) + (p - 1) * (i % 2 ? -1 : 1);
  if (num % p != 0) throw Error("sylow_multiplicity: non-integral average");
  return num / p;
}

std::int64_t sylow_multiplicity_brute(int p, int i) {
  std::vector<Point> cyc(p);
  for (int k = 0; k < p; ++k) cyc[k] = static_cast<Point>((k + 1) % p);
  PermGroup c(p, {Perm(cyc)});
  auto m = perm_character_multiplicities(p, c);
  return m.at(hook_partition(p, i));
}

std::optional<std::int64_t> sylow_multiplicity_unweighted(int p, int i) {
  std::int64_t num = binomial(p - 1, i) + (i % 2 ? -1 : 1);
  if (num % p != 0) return std::nullopt;
  return num / p;
}

std::map<Partition, std::int64_t> perm_character_multiplicities(
    int n, const PermGroup& h) {
  if (static_cast<int>(h.degree()) != n)
    throw Error("perm_character_multiplicities: subgroup degree differs from n");
  std::map<Partition, std::int64_t> types;
  for (const auto& x : h.elements().elems) {
    auto ct = x.cycle_type();
    ++types[Partition(ct.begin(), ct.end())];
  }
  const std::int64_t order = static_cast<std::int64_t>(h.order());
  std::map<Partition, std::int64_t> out;
  for (const auto& l : partitions(n)) {
    Memo memo;
    std::int64_t s = 0;
    for (const auto& [mu, count] : types) s = checked_add(s, checked_mul(count, mn_rec(l, mu, 0, memo)));
    if (s % order != 0) throw Error("perm_character_multiplicities: non-integral inner product");
    out[l] = s / order;
  }
  return out;
}

}  // namespace blockperm
