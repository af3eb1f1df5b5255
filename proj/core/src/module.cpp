#include "blockperm/module.hpp"

#include <algorithm>
#include <map>

#include "blockperm/poly.hpp"

namespace blockperm {

LinModule::LinModule(const Field& f, std::size_t d, std::vector<FqMatrix> a)
    : field(&f), dim(d), action(std::move(a)) {
  for (const auto& x : action) {
    if (x.rows() != d || x.cols() != d) throw DimensionMismatch("LinModule");
    if (&x.field() != &f) throw FieldMismatch();
  }
}

std::optional<std::vector<std::uint32_t>> as_permutation(const FqMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::uint32_t> img(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    int found = -1;
    for (std::size_t j = 0; j < n; ++j) {
      auto v = m(i, j);
      if (v == 0) continue;
      if (v != 1 || found >= 0) return std::nullopt;
      found = static_cast<int>(j);
    }
    if (found < 0 || seen[found]) return std::nullopt;
    seen[found] = true;
    img[i] = static_cast<std::uint32_t>(found);
  }
  return img;
}

LinModule submodule(const LinModule& m, const FqMatrix& basis) {
  const Field& f = *m.field;
  EchelonSpace es(f, m.dim, true);
  for (std::size_t i = 0; i < basis.rows(); ++i) es.add(basis.row(i));
  const FqMatrix& b = es.inserted();
  const std::size_t s = b.rows();
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) {
    FqMatrix img = b * a;
    FqMatrix r(f, s, s);
    for (std::size_t i = 0; i < s; ++i) {
      auto c = es.coords(img.row(i));
      if (!c) throw Error("submodule: subspace is not invariant");
      std::copy(c->begin(), c->end(), r.row(i));
    }
    act.push_back(std::move(r));
  }
  return LinModule(f, s, std::move(act));
}

LinModule quotient_module(const LinModule& m, const FqMatrix& sub) {
  const Field& f = *m.field;
  EchelonSpace es(f, m.dim);
  for (std::size_t i = 0; i < sub.rows(); ++i) es.add(sub.row(i));
  std::vector<bool> piv(m.dim, false);
  for (auto p : es.pivots()) piv[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < m.dim; ++i)
    if (!piv[i]) comp.push_back(i);
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) {
    FqMatrix r(f, comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      Vec v(a.row(comp[i]), a.row(comp[i]) + m.dim);
      es.reduce(v.data());
      for (std::size_t j = 0; j < comp.size(); ++j) r(i, j) = v[comp[j]];
    }
    act.push_back(std::move(r));
  }
  return LinModule(f, comp.size(), std::move(act));
}

LinModule transpose_module(const LinModule& m) {
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) act.push_back(a.transpose());
  return LinModule(*m.field, m.dim, std::move(act));
}

LinModule direct_sum(const LinModule& a, const LinModule& b) {
  if (a.gens() != b.gens()) throw DimensionMismatch("direct_sum: generator counts");
  const Field& f = *a.field;
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < a.gens(); ++k) {
    FqMatrix r(f, a.dim + b.dim, a.dim + b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      std::copy(a.action[k].row(i), a.action[k].row(i) + a.dim, r.row(i));
    for (std::size_t i = 0; i < b.dim; ++i)
      std::copy(b.action[k].row(i), b.action[k].row(i) + b.dim,
                r.row(a.dim + i) + a.dim);
    act.push_back(std::move(r));
  }
  return LinModule(f, a.dim + b.dim, std::move(act));
}

FqMatrix spin(const LinModule& m, const FqMatrix& v) {
  return row_space(spin_basis(v, m.action));
}

// ---------------------------------------------------------------------------

std::optional<Vec> HomSpace::coords(const FqMatrix& f) const {
  if (basis.empty()) {
    if (f.is_zero()) return Vec{};
    return std::nullopt;
  }
  FqMatrix img = seeds * f;
  return image_space->coords(img.data().data());
}

namespace {

// z * R where R is given either densely or as a permutation.
FqMatrix apply_right(const FqMatrix& z, const FqMatrix& r,
                     const std::optional<std::vector<std::uint32_t>>& perm) {
  if (!perm) return z * r;
  FqMatrix out(z.field(), z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i) {
    const auto* src = z.row(i);
    auto* dst = out.row(i);
    for (std::size_t j = 0; j < z.cols(); ++j) dst[(*perm)[j]] = src[j];
  }
  return out;
}

}  // namespace

HomSpace hom_space(const LinModule& m, const LinModule& n) {
  if (m.field != n.field) throw FieldMismatch();
  if (m.gens() != n.gens()) throw DimensionMismatch("hom_space: generator counts");
  const Field& f = *m.field;
  const std::size_t dm = m.dim, dn = n.dim, k = m.gens();
  HomSpace out;
  out.seeds = FqMatrix(f, 0, dm);
  if (dm == 0 || dn == 0) return out;

  std::vector<std::optional<std::vector<std::uint32_t>>> nperm;
  for (const auto& a : n.action) nperm.push_back(as_permutation(a));

  // Spin m from seeds; Z[j] holds the images of spin vector j for every
  // element of the current solution basis (rows), T the seed images.
  EchelonSpace es(f, dm, true);
  std::vector<FqMatrix> z;
  FqMatrix t(f, 0, 0);
  std::vector<std::size_t> seed_idx;
  Rng rng(0x6d6f64ULL);

  auto constrain = [&](const FqMatrix& e) {
    if (e.is_zero()) return;
    FqMatrix s = left_nullspace_basis(e);
    if (s.rows() == 0) s = FqMatrix(f, 0, e.rows());
    for (auto& zz : z) zz = s * zz;
    t = s * t;
  };

  while (es.dim() < dm) {
    Vec v(dm);
    do {
      for (auto& x : v) x = static_cast<Field::Elem>(rng() % f.q());
    } while (es.contains(v.data()));
    // new seed: its images are fresh unknowns
    const std::size_t d = t.rows(), u = t.cols();
    FqMatrix t2(f, d + dn, u + dn);
    for (std::size_t i = 0; i < d; ++i)
      std::copy(t.row(i), t.row(i) + u, t2.row(i));
    for (std::size_t i = 0; i < dn; ++i) t2(d + i, u + i) = 1;
    t = std::move(t2);
    for (auto& zz : z) zz = zz.vstack(FqMatrix(f, dn, dn));
    FqMatrix zs(f, d + dn, dn);
    for (std::size_t i = 0; i < dn; ++i) zs(d + i, i) = 1;
    seed_idx.push_back(es.dim());
    es.add(v);
    z.push_back(std::move(zs));
    for (std::size_t j = seed_idx.back(); j < es.dim(); ++j) {
      Vec bj(es.inserted().row(j), es.inserted().row(j) + dm);
      for (std::size_t g = 0; g < k; ++g) {
        Vec w = m.action[g].mul_vec(bj);
        FqMatrix zw = apply_right(z[j], n.action[g], nperm[g]);
        auto c = es.coords(w.data());
        if (!c) {
          es.add(w);
          z.push_back(std::move(zw));
          continue;
        }
        for (std::size_t s = 0; s < c->size(); ++s)
          if ((*c)[s]) zw.add_scaled(z[s], f.neg((*c)[s]));
        constrain(zw);
      }
    }
  }
  for (auto j : seed_idx)
    out.seeds.append_row(es.inserted().row(j));
  if (t.rows() == 0) return out;

  const std::size_t d = t.rows();
  auto binv = inverse(es.inserted());
  if (!binv) throw Error("hom_space: spin basis not invertible");
  for (std::size_t s = 0; s < d; ++s) {
    FqMatrix phi(f, dm, dn);
    for (std::size_t j = 0; j < dm; ++j)
      std::copy(z[j].row(s), z[j].row(s) + dn, phi.row(j));
    out.basis.push_back(*binv * phi);
  }
  out.seed_images = t;
  auto space = std::make_shared<EchelonSpace>(f, t.cols(), true);
  for (std::size_t s = 0; s < d; ++s) space->add(t.row(s));
  out.image_space = std::move(space);
  return out;
}

FinDimAlgebra endomorphism_algebra(const LinModule& m, const HomSpace& end) {
  const Field& f = *m.field;
  const std::size_t d = end.dim();
  std::vector<Field::Elem> mult(d * d * d, 0);
  for (std::size_t b = 0; b < d; ++b) {
    FqMatrix sb = end.seeds * end.basis[b];
    for (std::size_t a = 0; a < d; ++a) {
      // b_a * b_b = b_a o b_b, matrix F_b F_a
      FqMatrix img = sb * end.basis[a];
      auto c = end.image_space->coords(img.data().data());
      if (!c) throw Error("endomorphism_algebra: product outside the hom space");
      std::copy(c->begin(), c->end(), mult.begin() + (a * d + b) * d);
    }
  }
  auto one = end.coords(FqMatrix::identity(f, m.dim));
  if (!one) throw Error("endomorphism_algebra: identity missing");
  return FinDimAlgebra(f, d, std::move(mult), *one);
}

// ---------------------------------------------------------------------------

std::optional<FqMatrix> meataxe_split(const LinModule& m, Rng& rng) {
  const Field& f = *m.field;
  const std::size_t n = m.dim;
  if (n <= 1 || m.gens() == 0) {
    if (n <= 1) return std::nullopt;
    // no generators: any line is a submodule
    FqMatrix v(f, 1, n);
    v(0, 0) = 1;
    return v;
  }
  std::vector<FqMatrix> transposed;
  for (const auto& a : m.action) transposed.push_back(a.transpose());
  std::vector<FqMatrix> pool = m.action;
  constexpr std::size_t kPool = 12;
  for (int attempt = 0; attempt < 300; ++attempt) {
    const FqMatrix& a = pool[rng() % pool.size()];
    const FqMatrix& b = pool[rng() % pool.size()];
    FqMatrix ab = a * b;
    if (pool.size() < kPool)
      pool.push_back(std::move(ab));
    else
      pool[m.gens() + rng() % (kPool - m.gens())] = std::move(ab);
    FqMatrix x(f, n, n);
    for (const auto& p : pool)
      x.add_scaled(p, static_cast<Field::Elem>(rng() % f.q()));
    auto facs = factor(char_poly(x), rng);
    std::stable_sort(facs.begin(), facs.end(), [](const Factor& u, const Factor& v) {
      return u.poly.degree() < v.poly.degree();
    });
    int tried = 0;
    for (const auto& fac : facs) {
      if (tried >= 3) break;
      if (tried > 0 && fac.poly.degree() > 24) break;
      ++tried;
      FqMatrix nf = eval_matrix(fac.poly, x);
      FqMatrix null = left_nullspace_basis(nf);
      FqMatrix v = null.block(0, 0, 1, n);
      FqMatrix u = spin_basis(v, m.action);
      if (u.rows() < n) return row_space(u);
      FqMatrix nt = nullspace_basis(nf);
      FqMatrix w = spin_basis(nt.block(0, 0, 1, n), transposed);
      if (w.rows() < n) return row_space(nullspace_basis(w));
      if (null.rows() == static_cast<std::size_t>(fac.poly.degree()))
        return std::nullopt;
    }
  }
  throw Error("meataxe: no decision after many random elements");
}

bool is_irreducible(const LinModule& m, std::uint64_t seed) {
  Rng rng(seed);
  return !meataxe_split(m, rng);
}

int match_simple(const std::vector<LinModule>& simples, const LinModule& s) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].dim == s.dim && hom_space(simples[i], s).dim() > 0)
      return static_cast<int>(i);
  return -1;
}

namespace {

void collect_factors(const LinModule& m, Rng& rng, std::vector<LinModule>& out) {
  if (m.dim == 0) return;
  auto sub = meataxe_split(m, rng);
  if (!sub) {
    out.push_back(m);
    return;
  }
  collect_factors(submodule(m, *sub), rng, out);
  collect_factors(quotient_module(m, *sub), rng, out);
}

}  // namespace

CompositionFactors composition_factors(const LinModule& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LinModule> all;
  collect_factors(m, rng, all);
  CompositionFactors cf;
  for (auto& s : all) {
    int i = match_simple(cf.simples, s);
    if (i >= 0) {
      ++cf.multiplicity[i];
    } else {
      cf.endo_dim.push_back(hom_space(s, s).dim());
      cf.simples.push_back(std::move(s));
      cf.multiplicity.push_back(1);
    }
  }
  return cf;
}

FqMatrix radical_of(const LinModule& m, const std::vector<LinModule>& simples) {
  const Field& f = *m.field;
  FqMatrix big(f, m.dim, 0);
  for (const auto& s : simples)
    for (const auto& x : hom_space(m, s).basis) big = big.hstack(x);
  if (big.cols() == 0) return FqMatrix::identity(f, m.dim);
  return row_space(left_nullspace_basis(big));
}

FqMatrix socle_of(const LinModule& m, const std::vector<LinModule>& simples) {
  const Field& f = *m.field;
  EchelonSpace es(f, m.dim);
  for (const auto& s : simples)
    for (const auto& x : hom_space(s, m).basis)
      for (std::size_t i = 0; i < x.rows(); ++i) es.add(x.row(i));
  return es.echelon();
}

std::vector<std::vector<std::size_t>> radical_layers(
    const LinModule& m, const CompositionFactors& cf) {
  std::vector<std::vector<std::size_t>> layers;
  LinModule cur = m;
  while (cur.dim > 0) {
    const Field& f = *cur.field;
    std::vector<std::size_t> counts;
    FqMatrix big(f, cur.dim, 0);
    for (std::size_t j = 0; j < cf.simples.size(); ++j) {
      HomSpace h = hom_space(cur, cf.simples[j]);
      counts.push_back(h.dim() / cf.endo_dim[j]);
      for (const auto& x : h.basis) big = big.hstack(x);
    }
    if (big.cols() == 0) throw Error("radical_layers: module has no simple quotient in the list");
    layers.push_back(std::move(counts));
    FqMatrix rad = left_nullspace_basis(big);
    cur = submodule(cur, rad);
  }
  return layers;
}

std::vector<std::vector<std::size_t>> socle_layers(
    const LinModule& m, const CompositionFactors& cf) {
  std::vector<std::vector<std::size_t>> layers;
  LinModule cur = m;
  while (cur.dim > 0) {
    std::vector<std::size_t> counts;
    EchelonSpace es(*cur.field, cur.dim);
    for (std::size_t j = 0; j < cf.simples.size(); ++j) {
      HomSpace h = hom_space(cf.simples[j], cur);
      counts.push_back(h.dim() / cf.endo_dim[j]);
      for (const auto& x : h.basis)
        for (std::size_t i = 0; i < x.rows(); ++i) es.add(x.row(i));
    }
    if (es.dim() == 0) throw Error("socle_layers: module has no simple submodule in the list");
    layers.push_back(std::move(counts));
    cur = quotient_module(cur, es.echelon());
  }
  return layers;
}

// ---------------------------------------------------------------------------

std::size_t Decomposition::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : summands) t += s.multiplicity * s.module.dim;
  return t;
}

namespace {

FqMatrix combine(const std::vector<FqMatrix>& basis, const Vec& c) {
  FqMatrix r(basis[0].field(), basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) r.add_scaled(basis[i], c[i]);
  return r;
}

}  // namespace

Decomposition decompose(const LinModule& m, std::uint64_t seed) {
  Decomposition out;
  if (m.dim == 0) return out;
  HomSpace end = hom_space(m, m);
  out.end_algebra = endomorphism_algebra(m, end);
  auto prims = primitive_idempotent_decomposition(out.end_algebra,
                                                  out.end_algebra.one(), seed);
  std::map<int, std::size_t> slot;
  for (const auto& e : prims) {
    auto it = slot.find(e.iso_class);
    if (it != slot.end()) {
      ++out.summands[it->second].multiplicity;
      continue;
    }
    FqMatrix fe = combine(end.basis, e.coords);
    FqMatrix img = row_space(fe);
    Summand s{submodule(m, img), img, 1, e.coords};
    slot[e.iso_class] = out.summands.size();
    out.summands.push_back(std::move(s));
  }
  return out;
}

namespace {

bool random_iso(const HomSpace& h, std::size_t dim, Rng& rng, int tries) {
  if (h.dim() == 0) return false;
  const Field& f = h.basis[0].field();
  for (int t = 0; t < tries; ++t) {
    Vec c(h.dim());
    for (auto& x : c) x = static_cast<Field::Elem>(rng() % f.q());
    if (rank(combine(h.basis, c)) == dim) return true;
  }
  return false;
}

// For indecomposable a: a ~ b iff some g o f is an automorphism of a.
bool indecomposable_iso(const LinModule& a, const LinModule& b, Rng& rng) {
  if (a.dim != b.dim) return false;
  HomSpace ab = hom_space(a, b);
  if (ab.dim() == 0) return false;
  if (random_iso(ab, a.dim, rng, 8)) return true;
  HomSpace ba = hom_space(b, a);
  for (const auto& x : ab.basis)
    for (const auto& y : ba.basis)
      if (rank(x * y) == a.dim) return true;
  return false;
}

}  // namespace

bool is_isomorphic(const LinModule& a, const LinModule& b, std::uint64_t seed) {
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  Rng rng(seed);
  HomSpace ab = hom_space(a, b);
  if (ab.dim() == 0) return false;
  if (random_iso(ab, a.dim, rng, 24)) return true;
  Decomposition da = decompose(a, seed), db = decompose(b, seed);
  if (da.summands.size() != db.summands.size()) return false;
  std::vector<bool> used(db.summands.size(), false);
  for (const auto& sa : da.summands) {
    bool found = false;
    for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
      if (used[j] || db.summands[j].multiplicity != sa.multiplicity) continue;
      if (indecomposable_iso(sa.module, db.summands[j].module, rng)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace blockperm
