#include "blockperm/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace blockperm {

struct BlockData::Cache {
  std::mutex mu;
  std::optional<PermGroup> defect;
  std::optional<PermGroup> sylow;
};

FinDimAlgebra group_algebra(const PermGroup& g, const Field& f) {
  const auto& t = g.elements();
  const std::size_t n = t.size();
  constexpr std::size_t kMaxOrder = 640;
  if (n > kMaxOrder) throw CapExceeded("group algebra", n, kMaxOrder);
  std::vector<Field::Elem> mult(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + t.mul(i, j)] = 1;
  Vec one(n, 0);
  one[t.identity] = 1;
  return FinDimAlgebra(f, n, std::move(mult), std::move(one));
}

FinDimAlgebra class_algebra(const PermGroup& g, const Field& f) {
  const auto& t = g.elements();
  const auto& cc = g.conjugacy_classes();
  const std::size_t r = cc.reps.size();
  std::vector<std::uint32_t> count(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const Perm& z = t.elems[cc.reps[k]];
    for (std::size_t x = 0; x < t.size(); ++x) {
      auto y = t.index_of(t.elems[t.inverse[x]] * z);
      ++count[(cc.class_of[x] * r + cc.class_of[y]) * r + k];
    }
  }
  std::vector<Field::Elem> mult(count.size());
  for (std::size_t i = 0; i < count.size(); ++i) mult[i] = f.from_int(count[i]);
  Vec one(r, 0);
  one[cc.class_of[t.identity]] = 1;
  return FinDimAlgebra(f, r, std::move(mult), std::move(one));
}

Vec group_algebra_mul(const PermGroup& g, const Field& f, const Vec& x, const Vec& y) {
  const auto& t = g.elements();
  Vec out(t.size(), 0);
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!x[a]) continue;
    for (std::size_t c = 0; c < t.size(); ++c)
      if (y[c]) {
        auto z = t.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c));
        out[z] = f.add(out[z], f.mul(x[a], y[c]));
      }
  }
  return out;
}

std::vector<BlockData> block_decomposition(const PermGroup& g, const Field& f,
                                           std::uint64_t seed) {
  const auto& t = g.elements();
  const auto& cc = g.conjugacy_classes();
  FinDimAlgebra z = class_algebra(g, f);
  auto prims = primitive_idempotent_decomposition(z, z.one(), seed);
  const unsigned p = f.p();
  PermGroup s = g.order() % p == 0 ? sylow_subgroup(g, p) : PermGroup::trivial(g.degree());
  GModule perm = permutation_module(g, s, f);
  auto perms = all_element_permutations(perm);
  std::vector<BlockData> out;
  for (const auto& e : prims) {
    BlockData b;
    b.group = g;
    b.field = &f;
    b.class_coords = e.coords;
    b.idempotent.assign(t.size(), 0);
    Field::Elem aug = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      b.idempotent[x] = e.coords[cc.class_of[x]];
      aug = f.add(aug, b.idempotent[x]);
    }
    b.is_principal = aug != 0;
    b.dim = s.order() * rank(group_algebra_action(perm, b.idempotent, &perms));
    b.cache = std::make_shared<BlockData::Cache>();
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BlockData& a, const BlockData& b) {
    if (a.is_principal != b.is_principal) return a.is_principal;
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.class_coords < b.class_coords;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

Vec brauer_hom(const PermGroup& g, const Field& f, const Vec& x, const PermGroup& p) {
  const auto& t = g.elements();
  if (x.size() != t.size()) throw DimensionMismatch("brauer_hom");
  for (const auto& u : p.generators()) {
    Perm ui = u.inverse();
    for (std::size_t a = 0; a < t.size(); ++a)
      if (x[a] != x[t.index_of(u * t.elems[a] * ui)])
        throw Error("brauer_hom: element is not fixed under conjugation");
  }
  (void)f;
  Vec out(t.size(), 0);
  for (auto i : element_indices(g, centralizer(g, p))) out[i] = x[i];
  return out;
}

bool brauer_nonzero(const PermGroup& g, const Vec& x, const PermGroup& q) {
  for (auto i : element_indices(g, centralizer(g, q)))
    if (x[i]) return true;
  return false;
}

const PermGroup& defect_group(const BlockData& b) {
  std::lock_guard<std::mutex> lock(b.cache->mu);
  if (!b.cache->defect) {
    const unsigned p = b.field->p();
    if (b.group.order() % p != 0) {
      b.cache->defect = PermGroup::trivial(b.group.degree());
    } else {
      auto classes = p_subgroups_up_to_conjugacy(b.group, p);
      for (std::size_t i = classes.reps.size(); i-- > 0;)
        if (brauer_nonzero(b.group, b.idempotent, classes.reps[i])) {
          b.cache->defect = classes.reps[i];
          break;
        }
      if (!b.cache->defect) throw Error("defect_group: no p-subgroup with nonzero Brauer image");
    }
  }
  return *b.cache->defect;
}

const PermGroup& sylow_for(const BlockData& b) {
  const PermGroup& d = defect_group(b);
  std::lock_guard<std::mutex> lock(b.cache->mu);
  if (!b.cache->sylow) {
    const unsigned p = b.field->p();
    const PermGroup& g = b.group;
    if (g.order() % p != 0) {
      b.cache->sylow = d;
    } else {
      PermGroup s = sylow_subgroup(g, p);
      if (d.order() == s.order()) {
        b.cache->sylow = d;
      } else {
        for (const auto& x : g.elements().elems) {
          PermGroup c = conjugate(s, x);
          bool ok = true;
          for (const auto& u : d.generators()) ok = ok && c.contains(u);
          if (ok) {
            b.cache->sylow = c;
            break;
          }
        }
      }
    }
  }
  return *b.cache->sylow;
}

Vec FixedPointAlgebra::to_group(const Vec& coords) const {
  const Field& f = algebra.field();
  Vec orb(basis.cols(), 0);
  for (std::size_t s = 0; s < coords.size(); ++s)
    if (coords[s]) f.axpy(orb.data(), basis.row(s), coords[s], basis.cols());
  Vec out(orbit_of.size(), 0);
  for (std::size_t g = 0; g < orbit_of.size(); ++g) out[g] = orb[orbit_of[g]];
  return out;
}

bool FixedPointAlgebra::brauer_nonzero(const Vec& coords) const {
  const Field& f = algebra.field();
  Vec orb(basis.cols(), 0);
  for (std::size_t s = 0; s < coords.size(); ++s)
    if (coords[s]) f.axpy(orb.data(), basis.row(s), coords[s], basis.cols());
  for (std::size_t e = 0; e < orbits.size(); ++e)
    if (orbits[e].size() == 1 && orb[e]) return true;
  return false;
}

FixedPointAlgebra fixed_point_algebra(const BlockData& b, const PermGroup& p) {
  const PermGroup& g = b.group;
  if (!p.is_subgroup_of(g)) throw NotASubgroup("fixed_point_algebra");
  const Field& f = *b.field;
  const auto& t = g.elements();
  const std::size_t n = t.size();
  FixedPointAlgebra out;
  out.p = p;
  out.orbit_of.assign(n, UINT32_MAX);
  std::vector<std::pair<Perm, Perm>> conj;
  for (const auto& u : p.generators()) conj.emplace_back(u, u.inverse());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (out.orbit_of[a] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(out.orbits.size());
    std::vector<std::uint32_t> orb{a};
    out.orbit_of[a] = id;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& [u, ui] : conj) {
        auto c = t.index_of(u * t.elems[orb[i]] * ui);
        if (out.orbit_of[c] == UINT32_MAX) {
          out.orbit_of[c] = id;
          orb.push_back(c);
        }
      }
    out.orbits.push_back(std::move(orb));
  }
  const std::size_t no = out.orbits.size();
  // row d: b * (orbit sum d) in orbit-sum coordinates
  FqMatrix phi(f, no, no);
  for (std::size_t d = 0; d < no; ++d)
    for (std::size_t e = 0; e < no; ++e) {
      const Perm& ge = t.elems[out.orbits[e][0]];
      Field::Elem s = 0;
      for (auto y : out.orbits[d]) s = f.add(s, b.idempotent[t.index_of(ge * t.elems[t.inverse[y]])]);
      phi(d, e) = s;
    }
  EchelonSpace es(f, no, true);
  std::vector<std::size_t> chosen;
  for (std::size_t d = 0; d < no; ++d)
    if (es.add(phi.row(d))) chosen.push_back(d);
  const std::size_t dim = chosen.size();
  std::vector<Vec> kappa(no);
  for (std::size_t d = 0; d < no; ++d) kappa[d] = *es.coords(phi.row(d));
  std::vector<Field::Elem> mult(dim * dim * dim, 0);
  std::vector<std::uint32_t> hits(no, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t r = 0; r < dim; ++r) {
      touched.clear();
      for (auto x : out.orbits[chosen[s]])
        for (auto y : out.orbits[chosen[r]]) {
          auto z = t.mul(x, y);
          auto o = out.orbit_of[z];
          if (out.orbits[o][0] != z) continue;
          if (hits[o]++ == 0) touched.push_back(o);
        }
      Field::Elem* dst = mult.data() + (s * dim + r) * dim;
      for (auto o : touched) {
        f.axpy(dst, kappa[o].data(), f.from_int(hits[o]), dim);
        hits[o] = 0;
      }
    }
  Vec one = kappa[out.orbit_of[t.identity]];
  out.algebra = FinDimAlgebra(f, dim, std::move(mult), std::move(one));
  out.basis = phi.select_rows(chosen);
  return out;
}

SourceIdempotent source_idempotent(const BlockData& b, std::uint64_t seed) {
  const PermGroup& p = defect_group(b);
  FixedPointAlgebra fp = fixed_point_algebra(b, p);
  auto prims = primitive_idempotent_decomposition(fp.algebra, fp.algebra.one(), seed);
  for (const auto& e : prims)
    if (fp.brauer_nonzero(e.coords))
      return SourceIdempotent{p, e.coords, fp.to_group(e.coords), fp.algebra.dim()};
  throw Error("source_idempotent: no primitive idempotent with nonzero Brauer image");
}

GModule source_permutation_module(const BlockData& b, const SourceIdempotent& i) {
  const PermGroup& g = b.group;
  const Field& f = *b.field;
  const auto& t = g.elements();
  GModule m = permutation_module(g, i.p, f);
  CosetTable ct = left_cosets(g, i.p);
  std::vector<std::uint32_t> support;
  for (std::uint32_t y = 0; y < t.size(); ++y)
    if (i.group_coeffs[y]) support.push_back(y);
  FqMatrix r(f, ct.size(), ct.size());
  for (std::size_t c = 0; c < ct.size(); ++c)
    for (auto y : support) {
      auto d = ct.coset_of[t.mul(ct.reps[c], y)];
      r(c, d) = f.add(r(c, d), i.group_coeffs[y]);
    }
  return sub_gmodule(m, row_space(r));
}

GModule source_permutation_module(const BlockData& b, std::uint64_t seed) {
  return source_permutation_module(b, source_idempotent(b, seed));
}

GModule block_sylow_module(const BlockData& b, const PermGroup& s) {
  GModule m = permutation_module(b.group, s, *b.field);
  return sub_gmodule(m, row_space(group_algebra_action(m, b.idempotent)));
}

GModule block_sylow_module(const BlockData& b) {
  return block_sylow_module(b, sylow_for(b));
}

BrauerCorrespondent brauer_correspondent(const BlockData& b, std::uint64_t seed) {
  const PermGroup& p = defect_group(b);
  const Field& f = *b.field;
  PermGroup n = normalizer(b.group, p);
  Vec br = brauer_hom(b.group, f, b.idempotent, p);
  const auto& tg = b.group.elements();
  const auto& tn = n.elements();
  Vec brn(tn.size(), 0);
  for (std::size_t x = 0; x < tn.size(); ++x) brn[x] = br[tg.index_of(tn.elems[x])];
  for (auto& c : block_decomposition(n, f, seed)) {
    if (group_algebra_mul(n, f, brn, c.idempotent) != c.idempotent) continue;
    if (defect_group(c).order() != p.order()) continue;
    return BrauerCorrespondent{n, std::move(c)};
  }
  throw Error("brauer_correspondent: no block of the normalizer corresponds");
}

std::size_t num_simples(const BlockData& b, std::uint64_t seed) {
  if (defect_group(b).order() == 1) return 1;
  GModule m = block_sylow_module(b);
  return composition_factors(m.lin, seed).simples.size();
}

std::size_t gamma_count(const BlockData& b, const PermGroup& s) {
  GModule m = permutation_module(b.group, s, *b.field);
  FqMatrix fix = fixed_points(m, s);
  return rank(fix * group_algebra_action(m, b.idempotent));
}

std::size_t defect_zero_simple_dim(const BlockData& b) {
  if (defect_group(b).order() != 1) throw Error("defect_zero_simple_dim: block has positive defect");
  const Field& f = *b.field;
  FinDimAlgebra z = class_algebra(b.group, f);
  FqMatrix m(f, 0, z.dim());
  for (std::size_t i = 0; i < z.dim(); ++i) m.append_row(z.mul(z.basis_vector(i), b.class_coords));
  // B = M_n(D) with D = Z(B)
  const std::size_t e = rank(m);
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(b.dim / e))));
  if (n * n * e != b.dim) throw Error("defect-zero block is not a matrix algebra");
  return n * e;
}

bool nilpotent_hint(const BlockData& b) {
  const PermGroup& p = defect_group(b);
  PermGroup n = normalizer(b.group, p);
  PermGroup c = centralizer(b.group, p);
  PermGroup pc = intersection(b.group, p, c);
  return p.order() * c.order() == n.order() * pc.order();
}

}  // namespace blockperm
