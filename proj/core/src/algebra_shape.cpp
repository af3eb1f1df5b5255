#include <algorithm>
#include <map>

#include "blockperm/algebra.hpp"
#include "blockperm/module.hpp"

namespace blockperm {

namespace {

LinModule regular_left(const FinDimAlgebra& a) {
  std::vector<FqMatrix> act;
  for (std::size_t t = 0; t < a.dim(); ++t) act.push_back(a.left_basis_matrix(t));
  return LinModule(a.field(), a.dim(), std::move(act));
}

LinModule regular_right(const FinDimAlgebra& a) {
  std::vector<FqMatrix> act;
  for (std::size_t t = 0; t < a.dim(); ++t) act.push_back(a.right_basis_matrix(t));
  return LinModule(a.field(), a.dim(), std::move(act));
}

// dim of x A y
std::size_t corner_dim(const FinDimAlgebra& a, const Vec& x, const Vec& y) {
  return rank(a.left_matrix(x) * a.right_matrix(y));
}

// dim of x S y for the subspace S (rows)
std::size_t sandwich_dim(const FinDimAlgebra& a, const FqMatrix& s,
                         const Vec& x, const Vec& y) {
  if (s.rows() == 0) return 0;
  return rank(s * a.left_matrix(x) * a.right_matrix(y));
}

struct Classes {
  std::vector<Idempotent> prims;
  std::vector<Vec> reps;                 // one primitive per class
  std::vector<std::size_t> multiplicity;
};

Classes classify(const FinDimAlgebra& a, std::uint64_t seed) {
  Classes c;
  c.prims = primitive_idempotent_decomposition(a, a.one(), seed);
  std::map<int, std::size_t> slot;
  for (const auto& e : c.prims) {
    auto it = slot.find(e.iso_class);
    if (it != slot.end()) {
      ++c.multiplicity[it->second];
      continue;
    }
    slot[e.iso_class] = c.reps.size();
    c.reps.push_back(e.coords);
    c.multiplicity.push_back(1);
  }
  return c;
}

struct Basic {
  EmbeddedAlgebra alg;
  std::vector<Vec> prims;  // in basic coordinates
};

Basic make_basic(const FinDimAlgebra& a, std::uint64_t seed) {
  Classes c = classify(a, seed);
  Vec e = a.zero();
  for (const auto& r : c.reps) e = a.add(e, r);
  Basic b{corner(a, e), {}};
  for (const auto& r : c.reps) b.prims.push_back(b.alg.to_sub(r));
  return b;
}

}  // namespace

EmbeddedAlgebra basic_algebra(const FinDimAlgebra& a, std::uint64_t seed) {
  return make_basic(a, seed).alg;
}

AlgebraShape algebra_shape(const FinDimAlgebra& a, std::uint64_t seed) {
  AlgebraShape sh;
  Classes c = classify(a, seed);
  const std::size_t r = c.reps.size();
  auto powers = radical_powers(a);  // J, J^2, ..., 0
  const FqMatrix& j = powers.front();
  for (std::size_t i = 0; i < r; ++i) {
    const Vec& e = c.reps[i];
    const std::size_t pdim = rank(a.right_matrix(e));
    const std::size_t jdim = j.rows() ? rank(j * a.right_matrix(e)) : 0;
    sh.projective_dims.push_back(pdim);
    sh.simple_dims.push_back(pdim - jdim);
    sh.endo_dims.push_back(corner_dim(a, e, e) - sandwich_dim(a, j, e, e));
  }
  sh.multiplicities = c.multiplicity;
  sh.cartan.assign(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      sh.cartan[i][k] = corner_dim(a, c.reps[i], c.reps[k]) / sh.endo_dims[i];
  // layer l of P_i = J^l e_i / J^{l+1} e_i, and e_k picks out S_k
  std::vector<FqMatrix> layers;
  layers.push_back(FqMatrix::identity(a.field(), a.dim()));
  for (const auto& p : powers) layers.push_back(p);
  bool uniserial = true;
  sh.loewy.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
      std::vector<std::size_t> counts(r, 0);
      std::size_t total = 0;
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t d = sandwich_dim(a, layers[l], c.reps[k], c.reps[i]) -
                        sandwich_dim(a, layers[l + 1], c.reps[k], c.reps[i]);
        counts[k] = d / sh.endo_dims[k];
        total += counts[k];
      }
      if (total == 0) break;
      if (total > 1) uniserial = false;
      sh.loewy[i].push_back(std::move(counts));
    }
    // right projective e_i A
    for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
      std::size_t total = 0;
      for (std::size_t k = 0; k < r; ++k)
        total += (sandwich_dim(a, layers[l], c.reps[i], c.reps[k]) -
                  sandwich_dim(a, layers[l + 1], c.reps[i], c.reps[k])) /
                 sh.endo_dims[k];
      if (total > 1) uniserial = false;
    }
  }
  sh.is_split = std::all_of(sh.endo_dims.begin(), sh.endo_dims.end(),
                            [](std::size_t d) { return d == 1; });
  sh.is_basic = std::all_of(sh.multiplicities.begin(), sh.multiplicities.end(),
                            [](std::size_t m) { return m == 1; });
  sh.is_local = r == 1 && sh.multiplicities[0] == 1;
  sh.is_split_local = sh.is_local && sh.is_split;
  sh.is_nakayama = uniserial;
  return sh;
}

SelfInjectivityWitness is_self_injective(const FinDimAlgebra& a,
                                         std::uint64_t seed) {
  Basic b = make_basic(a, seed);
  const FinDimAlgebra& ba = b.alg.algebra;
  LinModule left = regular_left(ba);
  LinModule right = regular_right(ba);
  std::vector<LinModule> proj, inj;
  for (const auto& e : b.prims) {
    proj.push_back(submodule(left, row_space(ba.right_matrix(e))));
    inj.push_back(transpose_module(submodule(right, row_space(ba.left_matrix(e)))));
  }
  SelfInjectivityWitness w;
  w.self_injective = true;
  std::vector<bool> used(inj.size(), false);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    int match = -1;
    for (std::size_t k = 0; k < inj.size() && match < 0; ++k)
      if (!used[k] && is_isomorphic(proj[i], inj[k], seed))
        match = static_cast<int>(k);
    w.nakayama.push_back(match);
    if (match < 0) {
      w.self_injective = false;
      if (w.failing_projective < 0) w.failing_projective = static_cast<int>(i);
    } else {
      used[match] = true;
    }
  }
  return w;
}

namespace {

// Functionals vanishing on all commutators (rows).
FqMatrix symmetric_functionals(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  FqMatrix m(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto* ij = a.product_row(i, j);
      const auto* ji = a.product_row(j, i);
      for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = f.sub(ij[k], ji[k]);
    }
  return row_space(left_nullspace_basis(m));
}

std::optional<Vec> search_form(const FinDimAlgebra& a, const FqMatrix& lam,
                               Rng& rng, int tries) {
  const Field& f = a.field();
  for (int t = 0; t < tries; ++t) {
    Vec v(a.dim(), 0);
    for (std::size_t i = 0; i < lam.rows(); ++i)
      f.axpy(v.data(), lam.row(i), static_cast<Field::Elem>(rng() % f.q()),
             a.dim());
    if (is_nondegenerate_form(a, v)) return v;
  }
  return std::nullopt;
}

}  // namespace

SymmetryWitness is_symmetric(const FinDimAlgebra& a, std::uint64_t seed) {
  SymmetryWitness w;
  Rng rng(seed);
  w.symmetric_functionals = symmetric_functionals(a);
  const FqMatrix& lam = w.symmetric_functionals;
  auto inj = is_self_injective(a, seed);
  w.self_injective = inj.self_injective;
  if (w.self_injective) {
    w.weakly_symmetric = true;
    for (std::size_t i = 0; i < inj.nakayama.size(); ++i)
      if (inj.nakayama[i] != static_cast<int>(i)) w.weakly_symmetric = false;
  }
  if (lam.rows() == 0 || !w.self_injective) return w;
  if (auto v = search_form(a, lam, rng, 64)) {
    w.symmetric = true;
    w.form = v;
    return w;
  }
  // Exact decision on the basic algebra: a symmetric functional is
  // nondegenerate iff it is nonzero on each (simple) socle of A e_i.
  Basic b = make_basic(a, seed);
  const FinDimAlgebra& ba = b.alg.algebra;
  const Field& f = a.field();
  FqMatrix blam = symmetric_functionals(ba);
  FqMatrix j = radical(ba);
  FqMatrix ann(f, ba.dim(), 0);
  for (std::size_t r = 0; r < j.rows(); ++r)
    ann = ann.hstack(ba.left_matrix(Vec(j.row(r), j.row(r) + ba.dim())));
  FqMatrix killed = ann.cols() ? left_nullspace_basis(ann)
                               : FqMatrix::identity(f, ba.dim());
  std::vector<FqMatrix> conds;  // coefficient vectors c: lambda(soc) = c . coeffs
  for (const auto& e : b.prims) {
    FqMatrix soc = intersect_row_spaces(killed, row_space(ba.right_matrix(e)));
    FqMatrix vals = blam * soc.transpose();  // rows: functional, cols: soc basis
    if (vals.is_zero()) return w;
    conds.push_back(vals);
  }
  auto good = [&](const Vec& coef) {
    for (const auto& v : conds) {
      bool nz = false;
      for (std::size_t c = 0; c < v.cols() && !nz; ++c) {
        Field::Elem s = 0;
        for (std::size_t i = 0; i < v.rows(); ++i)
          s = f.add(s, f.mul(coef[i], v(i, c)));
        nz = s != 0;
      }
      if (!nz) return false;
    }
    return true;
  };
  const std::size_t s = blam.rows();
  bool exists = f.q() >= conds.size();
  if (!exists) {
    double space = 1;
    for (std::size_t i = 0; i < s; ++i) space *= f.q();
    if (space <= (1 << 20)) {
      Vec coef(s, 0);
      for (std::size_t it = 0; it < static_cast<std::size_t>(space) && !exists; ++it) {
        std::size_t x = it;
        for (std::size_t i = 0; i < s; ++i) {
          coef[i] = static_cast<Field::Elem>(x % f.q());
          x /= f.q();
        }
        exists = good(coef);
      }
    } else {
      Vec coef(s);
      for (int t = 0; t < 4096 && !exists; ++t) {
        for (auto& x : coef) x = static_cast<Field::Elem>(rng() % f.q());
        exists = good(coef);
      }
    }
  }
  w.symmetric = exists;
  if (exists) w.form = search_form(a, lam, rng, 4096);
  return w;
}

}  // namespace blockperm
