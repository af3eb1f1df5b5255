#include "blockperm/modrep.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>

namespace blockperm {

namespace {

using PermImg = std::vector<std::uint32_t>;

void same_group(const GModule& a, const GModule& b, const char* where) {
  if (a.group.degree() != b.group.degree() ||
      a.group.generators() != b.group.generators())
    throw Error(std::string(where) + ": modules over different groups");
  if (&a.field() != &b.field()) throw FieldMismatch();
}

// Generator indices of the word of element i, first-applied last:
// elems[i] = s_1 * s_2 * ... * s_L.
std::vector<std::uint32_t> word_of(const ElementTable& t, std::uint32_t i) {
  std::vector<std::uint32_t> w;
  while (t.parent[i] != i) {
    w.push_back(t.gen[i]);
    i = t.parent[i];
  }
  return w;
}

PermImg compose(const PermImg& first, const PermImg& then) {
  PermImg r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[first[i]];
  return r;
}

PermImg identity_img(std::size_t n) {
  PermImg r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

FqMatrix dense_power_word(const GModule& m, const std::vector<std::uint32_t>& w) {
  FqMatrix acc = FqMatrix::identity(m.field(), m.dim());
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * m.action()[*it];
  return acc;
}

}  // namespace

GModule make_gmodule(const PermGroup& g, const Field& f,
                     std::vector<FqMatrix> action) {
  if (action.size() != g.generators().size())
    throw DimensionMismatch("make_gmodule: one matrix per generator");
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  GModule m{g, LinModule(f, d, std::move(action)), {}, {}};
  return m;
}

GModule permutation_gmodule(const PermGroup& g, const Field& f,
                            std::vector<std::vector<std::uint32_t>> perms,
                            std::vector<std::string> tags) {
  if (perms.size() != g.generators().size())
    throw DimensionMismatch("permutation_gmodule: one permutation per generator");
  const std::size_t n = tags.size();
  std::vector<FqMatrix> act;
  for (const auto& p : perms) {
    if (p.size() != n) throw DimensionMismatch("permutation_gmodule: degree");
    act.push_back(FqMatrix::permutation(f, p));
  }
  GModule m{g, LinModule(f, n, std::move(act)), std::move(tags), std::move(perms)};
  return m;
}

GModule trivial_module(const PermGroup& g, const Field& f) {
  std::vector<PermImg> perms(g.generators().size(), PermImg{0});
  return permutation_gmodule(g, f, std::move(perms), {"*"});
}

GModule permutation_module(const PermGroup& g, const PermGroup& h,
                           const Field& f) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("permutation_module");
  CosetTable t = left_cosets(g, h);
  const ElementTable& el = g.elements();
  std::vector<std::string> tags;
  for (auto r : t.reps) tags.push_back(el.elems[r].cycle_string());
  std::vector<PermImg> perms(t.gen_images.begin(), t.gen_images.end());
  return permutation_gmodule(g, f, std::move(perms), std::move(tags));
}

GModule regular_module(const PermGroup& g, const Field& f) {
  return permutation_module(g, PermGroup::trivial(g.degree()), f);
}

GModule natural_module(const PermGroup& g, const Field& f) {
  std::vector<PermImg> perms;
  for (const auto& s : g.generators()) perms.push_back(s.images());
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < g.degree(); ++i) tags.push_back(std::to_string(i + 1));
  return permutation_gmodule(g, f, std::move(perms), std::move(tags));
}

GModule sub_gmodule(const GModule& m, const FqMatrix& basis) {
  return GModule{m.group, submodule(m.lin, basis), {}, {}};
}

GModule quotient_gmodule(const GModule& m, const FqMatrix& sub) {
  return GModule{m.group, quotient_module(m.lin, sub), {}, {}};
}

GModule dual_module(const GModule& m) {
  std::vector<FqMatrix> act;
  for (const auto& a : m.action()) {
    auto inv = inverse(a);
    if (!inv) throw Error("dual_module: singular generator matrix");
    act.push_back(inv->transpose());
  }
  GModule d{m.group, LinModule(m.field(), m.dim(), std::move(act)), m.tags, m.perms};
  return d;
}

GModule direct_sum(const GModule& a, const GModule& b) {
  same_group(a, b, "direct_sum");
  GModule s{a.group, direct_sum(a.lin, b.lin), {}, {}};
  if (a.has_permutation_basis() && b.has_permutation_basis()) {
    s.tags = a.tags;
    s.tags.insert(s.tags.end(), b.tags.begin(), b.tags.end());
    for (std::size_t k = 0; k < a.perms.size(); ++k) {
      PermImg p = a.perms[k];
      for (auto x : b.perms[k]) p.push_back(static_cast<std::uint32_t>(x + a.dim()));
      s.perms.push_back(std::move(p));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

FqMatrix element_matrix(const GModule& m, const Perm& x) {
  if (m.has_permutation_basis())
    return FqMatrix::permutation(m.field(), element_permutation(m, x));
  const ElementTable& t = m.group.elements();
  return dense_power_word(m, word_of(t, t.index_of(x)));
}

std::vector<std::uint32_t> element_permutation(const GModule& m, const Perm& x) {
  if (!m.has_permutation_basis())
    throw Error("element_permutation: module has no permutation basis");
  const ElementTable& t = m.group.elements();
  auto w = word_of(t, t.index_of(x));
  PermImg acc = identity_img(m.dim());
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = compose(acc, m.perms[*it]);
  return acc;
}

std::vector<FqMatrix> element_matrices(const GModule& m, const PermGroup& h) {
  const ElementTable& th = h.elements();
  std::vector<FqMatrix> gens;
  for (const auto& s : h.generators()) gens.push_back(element_matrix(m, s));
  std::vector<FqMatrix> out(th.size());
  for (auto i : th.bfs_order) {
    if (th.parent[i] == i)
      out[i] = FqMatrix::identity(m.field(), m.dim());
    else
      out[i] = out[th.parent[i]] * gens[th.gen[i]];
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> all_element_permutations(
    const GModule& m) {
  if (!m.has_permutation_basis())
    throw Error("all_element_permutations: module has no permutation basis");
  const ElementTable& t = m.group.elements();
  std::vector<PermImg> out(t.size());
  for (auto i : t.bfs_order) {
    if (t.parent[i] == i)
      out[i] = identity_img(m.dim());
    else
      out[i] = compose(out[t.parent[i]], m.perms[t.gen[i]]);
  }
  return out;
}

FqMatrix group_algebra_action(
    const GModule& m, const Vec& coeffs,
    const std::vector<std::vector<std::uint32_t>>* perms) {
  const Field& f = m.field();
  const ElementTable& t = m.group.elements();
  if (coeffs.size() != t.size())
    throw DimensionMismatch("group_algebra_action: coefficient vector");
  FqMatrix out(f, m.dim(), m.dim());
  if (m.has_permutation_basis()) {
    std::vector<PermImg> local;
    if (!perms) {
      local = all_element_permutations(m);
      perms = &local;
    }
    for (std::size_t g = 0; g < t.size(); ++g) {
      if (!coeffs[g]) continue;
      const auto& p = (*perms)[g];
      for (std::size_t i = 0; i < m.dim(); ++i)
        out(i, p[i]) = f.add(out(i, p[i]), coeffs[g]);
    }
    return out;
  }
  std::vector<FqMatrix> mats(t.size());
  for (auto i : t.bfs_order) {
    mats[i] = t.parent[i] == i ? FqMatrix::identity(f, m.dim())
                               : mats[t.parent[i]] * m.action()[t.gen[i]];
    if (coeffs[i]) out.add_scaled(mats[i], coeffs[i]);
  }
  return out;
}

bool is_representation(const GModule& m, std::size_t samples,
                       std::uint64_t seed) {
  const ElementTable& t = m.group.elements();
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Perm& x = t.elems[rng() % t.size()];
    const Perm& y = t.elems[rng() % t.size()];
    if (element_matrix(m, x * y) != element_matrix(m, y) * element_matrix(m, x))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

GModule restrict_module(const GModule& m, const PermGroup& h) {
  if (!h.is_subgroup_of(m.group)) throw NotASubgroup("restrict_module");
  GModule r{h, LinModule(), m.tags, {}};
  std::vector<FqMatrix> act;
  for (const auto& s : h.generators()) {
    if (m.has_permutation_basis()) {
      r.perms.push_back(element_permutation(m, s));
      act.push_back(FqMatrix::permutation(m.field(), r.perms.back()));
    } else {
      act.push_back(element_matrix(m, s));
    }
  }
  r.lin = LinModule(m.field(), m.dim(), std::move(act));
  return r;
}

GModule induce_module(const GModule& m, const PermGroup& g) {
  const PermGroup& h = m.group;
  if (!h.is_subgroup_of(g)) throw NotASubgroup("induce_module");
  CosetTable t = left_cosets(g, h);
  const ElementTable& el = g.elements();
  const std::size_t n = t.size(), d = m.dim();
  if (n * d > enumeration_cap()) throw CapExceeded("induced module", n * d, enumeration_cap());
  const Field& f = m.field();
  const bool perm = m.has_permutation_basis();
  GModule out{g, LinModule(), {}, {}};
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    FqMatrix r(f, n * d, n * d);
    PermImg pimg(n * d);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t c2 = t.gen_images[k][c];
      Perm hx = el.elems[t.reps[c2]].inverse() * g.generators()[k] * el.elems[t.reps[c]];
      if (perm) {
        PermImg ph = element_permutation(m, hx);
        for (std::size_t i = 0; i < d; ++i) {
          pimg[c * d + i] = static_cast<std::uint32_t>(c2 * d + ph[i]);
          r(c * d + i, c2 * d + ph[i]) = 1;
        }
      } else {
        FqMatrix rh = element_matrix(m, hx);
        for (std::size_t i = 0; i < d; ++i)
          std::copy(rh.row(i), rh.row(i) + d, r.row(c * d + i) + c2 * d);
      }
    }
    act.push_back(std::move(r));
    if (perm) out.perms.push_back(std::move(pimg));
  }
  out.lin = LinModule(f, n * d, std::move(act));
  if (perm)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < d; ++i)
        out.tags.push_back(el.elems[t.reps[c]].cycle_string() + "|" + m.tags[i]);
  return out;
}

GModule coinvariants(const GModule& m, const PermGroup& p,
                     const std::vector<FqMatrix>& right_action) {
  if (right_action.size() != p.generators().size())
    throw DimensionMismatch("coinvariants: one matrix per generator");
  const Field& f = m.field();
  FqMatrix sub(f, 0, m.dim());
  const FqMatrix id = FqMatrix::identity(f, m.dim());
  for (const auto& u : right_action) {
    for (const auto& a : m.action())
      if (a * u != u * a) throw Error("coinvariants: actions do not commute");
    sub = sub.vstack(u - id);
  }
  if (sub.rows() == 0) return m;
  return quotient_gmodule(m, row_space(sub));
}

std::vector<FqMatrix> regular_right_action(const PermGroup& g,
                                           const PermGroup& p, const Field& f) {
  if (!p.is_subgroup_of(g)) throw NotASubgroup("regular_right_action");
  const ElementTable& t = g.elements();
  std::vector<FqMatrix> out;
  for (const auto& u : p.generators()) {
    PermImg img(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) img[x] = t.index_of(t.elems[x] * u);
    out.push_back(FqMatrix::permutation(f, img));
  }
  return out;
}

// ---------------------------------------------------------------------------

FqMatrix fixed_points(const GModule& m, const PermGroup& h) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (m.has_permutation_basis()) {
    // orbit sums
    std::vector<std::uint32_t> comp = identity_img(n);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const auto& s : h.generators()) {
      PermImg p = element_permutation(m, s);
      for (std::size_t i = 0; i < n; ++i) {
        auto a = find(static_cast<std::uint32_t>(i)), b = find(p[i]);
        if (a != b) comp[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<std::uint32_t, std::size_t> row;
    for (std::size_t i = 0; i < n; ++i) row.emplace(find(static_cast<std::uint32_t>(i)), row.size());
    FqMatrix out(f, row.size(), n);
    for (std::size_t i = 0; i < n; ++i) out(row[find(static_cast<std::uint32_t>(i))], i) = 1;
    return out;
  }
  FqMatrix cond(f, n, 0);
  const FqMatrix id = FqMatrix::identity(f, n);
  for (const auto& s : h.generators()) cond = cond.hstack(element_matrix(m, s) - id);
  if (cond.cols() == 0) return id;
  return left_nullspace_basis(cond);
}

namespace {

// Stabilizer in g of basis point w of a permutation module, with the
// transversal t[x] (t[x] w = x) over the orbit.
PermGroup point_stabilizer(const GModule& m, std::uint32_t w,
                           std::vector<std::uint32_t>& orbit,
                           std::map<std::uint32_t, Perm>& trans) {
  const PermGroup& g = m.group;
  const auto& gens = g.generators();
  trans.clear();
  orbit.assign(1, w);
  trans.emplace(w, Perm(g.degree()));
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = m.perms[k][orbit[i]];
      if (trans.count(y)) continue;
      trans.emplace(y, gens[k] * trans.at(orbit[i]));
      orbit.push_back(y);
    }
  std::vector<Perm> sgens;
  PermGroup stab = PermGroup::trivial(g.degree());
  for (auto x : orbit)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm s = trans.at(m.perms[k][x]).inverse() * gens[k] * trans.at(x);
      if (s.is_identity() || stab.contains(s)) continue;
      sgens.push_back(s);
      stab = PermGroup(g.degree(), sgens);
    }
  return stab;
}

// Hom from a permutation module: each orbit contributes one map per fixed
// vector of its point stabilizer on the target.
HomSpace permutation_hom(const GModule& m, const GModule& n) {
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  HomSpace out;
  out.seeds = FqMatrix(f, 0, dm);
  std::vector<bool> seen(dm, false);
  std::vector<std::optional<PermImg>> nperm;
  for (std::size_t k = 0; k < n.action().size(); ++k)
    nperm.push_back(n.has_permutation_basis() ? std::optional<PermImg>(n.perms[k])
                                              : as_permutation(n.action()[k]));
  std::vector<std::uint32_t> orbit;
  std::map<std::uint32_t, Perm> trans;
  std::vector<std::size_t> seed_point;
  std::vector<std::pair<std::size_t, Vec>> pieces;  // (orbit index, fixed vector)
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t w = 0; w < dm; ++w) {
    if (seen[w]) continue;
    PermGroup stab = point_stabilizer(m, w, orbit, trans);
    for (auto x : orbit) seen[x] = true;
    Vec e(dm, 0);
    e[w] = 1;
    out.seeds.append_row(e);
    FqMatrix fix = fixed_points(n, stab);
    for (std::size_t r = 0; r < fix.rows(); ++r)
      pieces.emplace_back(orbits.size(), Vec(fix.row(r), fix.row(r) + dn));
    orbits.push_back(orbit);
  }
  const std::size_t ns = orbits.size();
  out.seed_images = FqMatrix(f, pieces.size(), ns * dn);
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    const auto& [o, u] = pieces[t];
    const auto& orb = orbits[o];
    FqMatrix phi(f, dm, dn);
    std::copy(u.begin(), u.end(), phi.row(orb[0]));
    std::vector<bool> done(dm, false);
    done[orb[0]] = true;
    std::vector<std::uint32_t> queue{orb[0]};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto x = queue[i];
      for (std::size_t k = 0; k < m.perms.size(); ++k) {
        const auto y = m.perms[k][x];
        if (done[y]) continue;
        done[y] = true;
        queue.push_back(y);
        if (nperm[k]) {
          for (std::size_t j = 0; j < dn; ++j) phi(y, (*nperm[k])[j]) = phi(x, j);
        } else {
          Vec v = n.action()[k].mul_vec(phi.row(x));
          std::copy(v.begin(), v.end(), phi.row(y));
        }
      }
    }
    std::copy(u.begin(), u.end(), out.seed_images.row(t) + o * dn);
    out.basis.push_back(std::move(phi));
  }
  auto space = std::make_shared<EchelonSpace>(f, ns * dn, true);
  for (std::size_t t = 0; t < pieces.size(); ++t) space->add(out.seed_images.row(t));
  out.image_space = std::move(space);
  return out;
}

}  // namespace

HomSpace hom_space(const GModule& m, const GModule& n) {
  same_group(m, n, "hom_space");
  if (m.has_permutation_basis() && m.dim() > 0 && n.dim() > 0)
    return permutation_hom(m, n);
  return hom_space(m.lin, n.lin);
}

FinDimAlgebra endomorphism_algebra(const GModule& m) {
  return endomorphism_algebra(m.lin, hom_space(m, m));
}

bool is_projective(const GModule& m) {
  const unsigned p = m.field().p();
  const auto order = m.group.order();
  if (order % p != 0) return true;
  PermGroup s = sylow_subgroup(m.group, p);
  const std::size_t ps = s.order();
  if (m.dim() % ps != 0) return false;
  const Field& f = m.field();
  FqMatrix norm(f, m.dim(), m.dim());
  const ElementTable& ts = s.elements();
  if (m.has_permutation_basis()) {
    std::vector<PermImg> gp;
    for (const auto& g : s.generators()) gp.push_back(element_permutation(m, g));
    std::vector<PermImg> all(ts.size());
    for (auto i : ts.bfs_order) {
      all[i] = ts.parent[i] == i ? identity_img(m.dim())
                                 : compose(all[ts.parent[i]], gp[ts.gen[i]]);
      for (std::size_t r = 0; r < m.dim(); ++r)
        norm(r, all[i][r]) = f.add(norm(r, all[i][r]), 1);
    }
  } else {
    for (const auto& x : element_matrices(m, s)) norm += x;
  }
  return rank(norm) == m.dim() / ps;
}

std::size_t GDecomposition::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : summands) t += s.module.dim() * s.multiplicity;
  return t;
}

GDecomposition decompose(const GModule& m, std::uint64_t seed) {
  GDecomposition out;
  if (m.dim() == 0) return out;
  HomSpace end = hom_space(m, m);
  out.end_algebra = endomorphism_algebra(m.lin, end);
  auto prims = primitive_idempotent_decomposition(out.end_algebra,
                                                  out.end_algebra.one(), seed);
  std::map<int, std::size_t> slot;
  for (const auto& e : prims) {
    auto it = slot.find(e.iso_class);
    if (it != slot.end()) {
      ++out.summands[it->second].multiplicity;
      continue;
    }
    FqMatrix fe(m.field(), m.dim(), m.dim());
    for (std::size_t i = 0; i < end.dim(); ++i)
      if (e.coords[i]) fe.add_scaled(end.basis[i], e.coords[i]);
    FqMatrix img = row_space(fe);
    slot[e.iso_class] = out.summands.size();
    out.summands.push_back({sub_gmodule(m, img), img, 1});
  }
  return out;
}

bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed) {
  same_group(a, b, "is_isomorphic");
  return is_isomorphic(a.lin, b.lin, seed);
}

}  // namespace blockperm
