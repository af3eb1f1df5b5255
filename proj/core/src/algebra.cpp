#include "blockperm/algebra.hpp"

#include <algorithm>
#include <functional>

#include "blockperm/poly.hpp"

namespace blockperm {

FinDimAlgebra::FinDimAlgebra(const Field& f, std::size_t dim,
                             std::vector<Elem> mult, Vec one,
                             std::vector<std::string> labels)
    : field_(&f),
      n_(dim),
      mult_(std::move(mult)),
      one_(std::move(one)),
      labels_(std::move(labels)) {
  if (mult_.size() != n_ * n_ * n_ || one_.size() != n_)
    throw DimensionMismatch("FinDimAlgebra");
  if (!labels_.empty() && labels_.size() != n_)
    throw DimensionMismatch("FinDimAlgebra labels");
}

FinDimAlgebra FinDimAlgebra::from_matrices(
    const Field& f, const std::vector<FqMatrix>& spanning) {
  if (spanning.empty()) throw Error("from_matrices: empty spanning set");
  const std::size_t m = spanning[0].rows();
  EchelonSpace es(f, m * m, true);
  for (const auto& x : spanning) {
    if (x.rows() != m || x.cols() != m) throw DimensionMismatch("from_matrices");
    es.add(x.data().data());
  }
  const FqMatrix& basis = es.inserted();
  const std::size_t n = basis.rows();
  std::vector<FqMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    FqMatrix x(f, m, m);
    std::copy(basis.row(i), basis.row(i) + m * m, x.row(0));
    mats.push_back(std::move(x));
  }
  std::vector<Elem> mult(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FqMatrix pr = mats[i] * mats[j];
      auto c = es.coords(pr.data().data());
      if (!c) throw Error("from_matrices: span is not closed under products");
      std::copy(c->begin(), c->end(), mult.begin() + (i * n + j) * n);
    }
  FqMatrix id = FqMatrix::identity(f, m);
  auto one = es.coords(id.data().data());
  if (!one) throw Error("from_matrices: span does not contain the identity");
  return FinDimAlgebra(f, n, std::move(mult), *one);
}

FinDimAlgebra FinDimAlgebra::matrix_algebra(const Field& f, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Elem> mult(d * d * d, 0);
  Vec one(d, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    one[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l)
        mult[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
    }
  }
  return FinDimAlgebra(f, d, std::move(mult), std::move(one),
                       std::move(labels));
}

FinDimAlgebra FinDimAlgebra::truncated_poly(const Field& f,
                                            const std::vector<Elem>& monic_g) {
  Poly g(f, monic_g);
  if (g.degree() < 1 || g.lead() != 1)
    throw Error("truncated_poly: modulus must be monic of positive degree");
  const std::size_t d = static_cast<std::size_t>(g.degree());
  std::vector<Elem> mult(d * d * d, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Elem> mono(i + j + 1, 0);
      mono[i + j] = 1;
      Poly r = Poly(f, mono) % g;
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = r[k];
    }
  }
  Vec one(d, 0);
  one[0] = 1;
  return FinDimAlgebra(f, d, std::move(mult), std::move(one),
                       std::move(labels));
}

FinDimAlgebra FinDimAlgebra::direct_product(
    const std::vector<FinDimAlgebra>& parts) {
  if (parts.empty()) throw Error("direct_product: no factors");
  const Field& f = parts[0].field();
  std::size_t n = 0;
  for (const auto& a : parts) {
    if (&a.field() != &f) throw FieldMismatch();
    n += a.dim();
  }
  std::vector<Elem> mult(n * n * n, 0);
  Vec one(n, 0);
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto& a = parts[t];
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
      one[off + i] = a.one()[i];
      labels.push_back(std::to_string(t + 1) + ":" +
                       (a.labels().empty() ? "b" + std::to_string(i)
                                           : a.labels()[i]));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          mult[((off + i) * n + off + j) * n + off + k] = a.c(i, j, k);
    }
    off += d;
  }
  return FinDimAlgebra(f, n, std::move(mult), std::move(one),
                       std::move(labels));
}

Vec FinDimAlgebra::basis_vector(std::size_t i) const {
  Vec v(n_, 0);
  v[i] = 1;
  return v;
}

Vec FinDimAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec r(n_, 0);
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < n_; ++j)
    if (y[j]) ny.push_back(j);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j : ny)
      field_->axpy(r.data(), product_row(i, j), field_->mul(x[i], y[j]), n_);
  }
  return r;
}

Vec FinDimAlgebra::add(const Vec& x, const Vec& y) const {
  Vec r = x;
  field_->axpy(r.data(), y.data(), 1, n_);
  return r;
}

Vec FinDimAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec r = x;
  field_->axpy(r.data(), y.data(), field_->neg(1), n_);
  return r;
}

Vec FinDimAlgebra::scale(const Vec& x, Elem s) const {
  Vec r = x;
  field_->scale(r.data(), s, n_);
  return r;
}

Vec FinDimAlgebra::random_element(Rng& rng) const {
  Vec r(n_);
  for (auto& x : r) x = static_cast<Elem>(rng() % field_->q());
  return r;
}

bool FinDimAlgebra::is_zero(const Vec& x) const {
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
}

FqMatrix FinDimAlgebra::left_matrix(const Vec& x) const {
  FqMatrix m(*field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j)
      field_->axpy(m.row(j), product_row(i, j), x[i], n_);
  }
  return m;
}

FqMatrix FinDimAlgebra::right_matrix(const Vec& x) const {
  FqMatrix m(*field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j)
      field_->axpy(m.row(j), product_row(j, i), x[i], n_);
  }
  return m;
}

FqMatrix FinDimAlgebra::left_basis_matrix(std::size_t i) const {
  return left_matrix(basis_vector(i));
}

FqMatrix FinDimAlgebra::right_basis_matrix(std::size_t i) const {
  return right_matrix(basis_vector(i));
}

bool FinDimAlgebra::is_associative() const {
  // (b_i b_j) b_k = b_i (b_j b_k)
  std::vector<FqMatrix> right;
  for (std::size_t k = 0; k < n_; ++k) right.push_back(right_basis_matrix(k));
  for (std::size_t i = 0; i < n_; ++i) {
    FqMatrix li = left_basis_matrix(i);
    for (std::size_t j = 0; j < n_; ++j) {
      Vec ij(product_row(i, j), product_row(i, j) + n_);
      for (std::size_t k = 0; k < n_; ++k) {
        Vec lhs = right[k].mul_vec(ij);
        Vec jk(product_row(j, k), product_row(j, k) + n_);
        Vec rhs = li.mul_vec(jk);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool FinDimAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!std::equal(product_row(i, j), product_row(i, j) + n_,
                      product_row(j, i)))
        return false;
  return true;
}

bool FinDimAlgebra::is_identity(const Vec& e) const {
  for (std::size_t i = 0; i < n_; ++i) {
    Vec b = basis_vector(i);
    if (mul(e, b) != b || mul(b, e) != b) return false;
  }
  return true;
}

bool FinDimAlgebra::is_idempotent(const Vec& e) const { return mul(e, e) == e; }

bool FinDimAlgebra::is_central(const Vec& x) const {
  for (std::size_t i = 0; i < n_; ++i) {
    Vec b = basis_vector(i);
    if (mul(x, b) != mul(b, x)) return false;
  }
  return true;
}

FqMatrix FinDimAlgebra::center() const {
  // x central iff coords(x) (R_j - L_j) = 0 for every basis element b_j
  FqMatrix big(*field_, n_, n_ * n_);
  for (std::size_t m = 0; m < n_; ++m)
    for (std::size_t j = 0; j < n_; ++j) {
      const Elem* xb = product_row(m, j);
      const Elem* bx = product_row(j, m);
      for (std::size_t k = 0; k < n_; ++k)
        big(m, j * n_ + k) = field_->sub(xb[k], bx[k]);
    }
  return row_space(left_nullspace_basis(big));
}

// ---------------------------------------------------------------------------

Vec EmbeddedAlgebra::to_sub(const Vec& parent) const {
  auto c = space.coords(parent.data());
  if (!c) throw Error("element outside the embedded subalgebra");
  return *c;
}

Vec EmbeddedAlgebra::to_parent(const Vec& sub) const {
  return basis.mul_vec(sub);
}

EmbeddedAlgebra subalgebra(const FinDimAlgebra& a, const FqMatrix& basis,
                           const Vec& one) {
  const Field& f = a.field();
  EchelonSpace es(f, a.dim(), true);
  for (std::size_t i = 0; i < basis.rows(); ++i) es.add(basis.row(i));
  FqMatrix b = es.inserted();
  const std::size_t r = b.rows();
  std::vector<Field::Elem> mult(r * r * r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    Vec bj(b.row(j), b.row(j) + a.dim());
    FqMatrix prod = b * a.right_matrix(bj);  // row i: b_i * b_j
    for (std::size_t i = 0; i < r; ++i) {
      auto c = es.coords(prod.row(i));
      if (!c) throw Error("subalgebra: span is not closed under products");
      std::copy(c->begin(), c->end(), mult.begin() + (i * r + j) * r);
    }
  }
  auto oc = es.coords(one.data());
  if (!oc) throw Error("subalgebra: identity outside the span");
  return EmbeddedAlgebra{FinDimAlgebra(f, r, std::move(mult), *oc), b,
                         std::move(es)};
}

EmbeddedAlgebra corner(const FinDimAlgebra& a, const Vec& e) {
  // row i of L_e R_e is e b_i e
  FqMatrix m = a.left_matrix(e) * a.right_matrix(e);
  return subalgebra(a, row_space(m), e);
}

Vec Quotient::project(const Vec& parent) const {
  Vec v = parent;
  ideal.reduce(v.data());
  Vec r(complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) r[i] = v[complement[i]];
  return r;
}

Vec Quotient::lift(const Vec& q) const {
  Vec v(ideal.ambient(), 0);
  for (std::size_t i = 0; i < complement.size(); ++i) v[complement[i]] = q[i];
  return v;
}

Quotient quotient(const FinDimAlgebra& a, const FqMatrix& ideal) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  EchelonSpace es(f, n);
  for (std::size_t i = 0; i < ideal.rows(); ++i) es.add(ideal.row(i));
  std::vector<bool> piv(n, false);
  for (auto p : es.pivots()) piv[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!piv[i]) comp.push_back(i);
  Quotient q{FinDimAlgebra(), comp, std::move(es)};
  const std::size_t d = comp.size();
  std::vector<Field::Elem> mult(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Field::Elem* row = a.product_row(comp[i], comp[j]);
      Vec pr = q.project(Vec(row, row + n));
      std::copy(pr.begin(), pr.end(), mult.begin() + (i * d + j) * d);
    }
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (auto c : comp) labels.push_back(a.labels()[c]);
  q.algebra = FinDimAlgebra(f, d, std::move(mult), q.project(a.one()),
                            std::move(labels));
  return q;
}

// ---------------------------------------------------------------------------

namespace {

using IntMat = std::vector<std::uint32_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n,
               std::uint32_t mod) {
  IntMat r(n * n);
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (!x) continue;
      const std::uint32_t* br = &b[k * n];
      for (std::size_t j = 0; j < n; ++j) acc[j] += x * br[j];
    }
    for (std::size_t j = 0; j < n; ++j)
      r[i * n + j] = static_cast<std::uint32_t>(acc[j] % mod);
  }
  return r;
}

std::uint64_t int_trace_of_product(const IntMat& a, const IntMat& b,
                                   std::size_t n, std::uint32_t mod) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < n; ++k)
      s += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + i];
    t = (t + s % mod) % mod;
  }
  return t;
}

IntMat int_pow(const IntMat& a, std::uint64_t e, std::size_t n,
               std::uint32_t mod) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  IntMat b = a;
  while (e) {
    if (e & 1) r = int_mul(r, b, n, mod);
    e >>= 1;
    if (e) b = int_mul(b, b, n, mod);
  }
  return r;
}

// Tr(a^(p^i)) mod p^(i+1) on the integer lift, avoiding the last product.
std::uint64_t trace_of_ppower(const IntMat& a, unsigned p, unsigned i,
                              std::size_t n, std::uint32_t mod) {
  if (i == 0) {
    std::uint64_t t = 0;
    for (std::size_t k = 0; k < n; ++k) t += a[k * n + k];
    return t % mod;
  }
  IntMat x = a;
  for (unsigned s = 0; s + 1 < i; ++s) x = int_pow(x, p, n, mod);
  IntMat y = int_pow(x, p - 1, n, mod);
  return int_trace_of_product(y, x, n, mod);
}

}  // namespace

FqMatrix radical(const FinDimAlgebra& a) {
  const Field& F = a.field();
  const unsigned p = F.p(), e = F.e();
  const std::size_t n = a.dim();
  const std::size_t N = n * e;
  const Field& Fp = Field::get(p, 1);
  if (n == 0) return FqMatrix(F, 0, 0);

  // F_p basis u_{j,t} = w^t b_j, where the element with encoding p^t is w^t
  std::vector<Field::Elem> wpow(e);
  for (unsigned t = 0; t < e; ++t) {
    unsigned v = 1;
    for (unsigned s = 0; s < t; ++s) v *= p;
    wpow[t] = static_cast<Field::Elem>(v);
  }
  auto compress = [&](const Field::Elem* v) {
    Vec r(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      unsigned val = 0, pw = 1;
      for (unsigned t = 0; t < e; ++t) {
        val += v[j * e + t] * pw;
        pw *= p;
      }
      r[j] = static_cast<Field::Elem>(val);
    }
    return r;
  };
  // F_p matrix of left multiplication by x; row (j,t) holds x * u_{j,t}
  auto regular = [&](const Vec& x) {
    FqMatrix l = a.left_matrix(x);
    FqMatrix m(Fp, N, N);
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned t = 0; t < e; ++t) {
        Field::Elem* out = m.row(j * e + t);
        for (std::size_t k = 0; k < n; ++k) {
          unsigned v = F.mul(l(j, k), wpow[t]);
          for (unsigned s = 0; s < e; ++s) {
            out[k * e + s] = static_cast<Field::Elem>(v % p);
            v /= p;
          }
        }
      }
    return m;
  };

  FqMatrix ideal = FqMatrix::identity(Fp, N);
  std::uint64_t pi = 1;  // p^i
  for (unsigned i = 0; pi <= N && ideal.rows() > 0; ++i, pi *= p) {
    const std::uint32_t mod = static_cast<std::uint32_t>(pi * p);
    const std::size_t r = ideal.rows();
    std::vector<FqMatrix> regs;
    FqMatrix phi(Fp, r, 1);
    for (std::size_t s = 0; s < r; ++s) {
      FqMatrix m = regular(compress(ideal.row(s)));
      IntMat im(m.data().begin(), m.data().end());
      std::uint64_t tr = trace_of_ppower(im, p, i, N, mod);
      if (tr % pi != 0) throw Error("radical: trace divisibility failed");
      phi(s, 0) = static_cast<Field::Elem>((tr / pi) % p);
      regs.push_back(std::move(m));
    }
    // psi extends the linear functional g_i from the ideal to F_p^N
    auto psi = solve(ideal, phi);
    if (!psi) throw Error("radical: inconsistent trace functional");
    FqMatrix w(Fp, r, N);
    for (std::size_t s = 0; s < r; ++s) {
      FqMatrix col = regs[s] * *psi;
      for (std::size_t c = 0; c < N; ++c) w(s, c) = col(c, 0);
    }
    FqMatrix alpha = left_nullspace_basis(w);
    ideal = alpha.rows() ? alpha * ideal : FqMatrix(Fp, 0, N);
  }
  FqMatrix out(F, 0, n);
  for (std::size_t s = 0; s < ideal.rows(); ++s)
    out.append_row(compress(ideal.row(s)));
  if (out.rows() == 0) return out;
  RrefResult rr = rref(out);
  return rr.matrix.block(0, 0, rr.rank, n);
}

FqMatrix product_space(const FinDimAlgebra& a, const FqMatrix& x,
                       const FqMatrix& y) {
  const std::size_t n = a.dim();
  EchelonSpace es(a.field(), n);
  for (std::size_t j = 0; j < y.rows() && es.dim() < n; ++j) {
    if (x.rows() == 0) break;
    FqMatrix prod = x * a.right_matrix(Vec(y.row(j), y.row(j) + n));
    for (std::size_t i = 0; i < prod.rows(); ++i) es.add(prod.row(i));
  }
  return es.echelon();
}

std::vector<FqMatrix> radical_powers(const FinDimAlgebra& a) {
  std::vector<FqMatrix> out;
  FqMatrix j = radical(a);
  FqMatrix cur = j;
  out.push_back(cur);
  while (cur.rows() > 0) {
    cur = product_space(a, cur, j);
    out.push_back(cur);
    if (out.size() > a.dim() + 1) throw Error("radical is not nilpotent");
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// b^-1 mod m for coprime b, m
Poly inverse_mod(const Poly& b, const Poly& m) {
  const Field& F = m.field();
  Poly r0 = m, r1 = b % m;
  Poly s0(F), s1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error("inverse_mod: not coprime");
  return (s0.scaled(F.inv(r0.lead()))) % m;
}

// g(x) inside the algebra with identity f (x in fAf).
Vec eval_poly(const FinDimAlgebra& a, const Poly& g, const Vec& x,
              const Vec& f) {
  FqMatrix l = a.left_matrix(x);
  const Field& F = a.field();
  Vec acc(a.dim(), 0);
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    acc = l.mul_vec(acc);
    F.axpy(acc.data(), f.data(), g.coeffs()[k], a.dim());
  }
  return acc;
}

// Splits an idempotent f using x in fAf whose minimal polynomial (relative
// to f) has at least two distinct irreducible factors.
std::optional<std::pair<Vec, Vec>> split_by(const FinDimAlgebra& a,
                                            const Vec& x, const Vec& f,
                                            Rng& rng, Poly* minpoly) {
  Poly m = local_min_poly(a.left_matrix(x), f);
  if (minpoly) *minpoly = m;
  auto fac = factor(m, rng);
  if (fac.size() < 2) return std::nullopt;
  Poly m1(a.field(), {1});
  for (int k = 0; k < fac[0].multiplicity; ++k) m1 = m1 * fac[0].poly;
  Poly m2 = m / m1;
  Poly h = (m2 * inverse_mod(m2, m1)) % m;
  Vec e1 = eval_poly(a, h, x, f);
  // in a non-semisimple algebra e1 need not be idempotent yet
  for (int it = 0; it < 64 && !(a.mul(e1, e1) == e1); ++it) {
    Vec e2 = a.mul(e1, e1);
    Vec e3 = a.mul(e2, e1);
    e1 = a.sub(a.scale(e2, a.field().from_int(3)),
               a.scale(e3, a.field().from_int(2)));
  }
  if (!a.is_idempotent(e1)) throw Error("idempotent refinement diverged");
  return std::make_pair(e1, a.sub(f, e1));
}

Vec random_in_span(const FqMatrix& basis, Rng& rng) {
  const Field& F = basis.field();
  Vec v(basis.cols(), 0);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    F.axpy(v.data(), basis.row(i), static_cast<Field::Elem>(rng() % F.q()),
           basis.cols());
  return v;
}

constexpr int kMaxAttempts = 400;

// Primitive idempotents of the commutative semisimple subalgebra spanned by
// z (containing `one`).
std::vector<Vec> split_commutative(const FinDimAlgebra& q, const FqMatrix& z,
                                   const Vec& one, Rng& rng) {
  std::vector<Vec> done, todo{one};
  while (!todo.empty()) {
    Vec f = todo.back();
    todo.pop_back();
    FqMatrix fz = row_space(z * q.left_matrix(f));
    if (fz.rows() <= 1) {
      done.push_back(f);
      continue;
    }
    bool settled = false;
    for (int att = 0; att < kMaxAttempts && !settled; ++att) {
      Vec x = random_in_span(fz, rng);
      Poly m(q.field());
      auto parts = split_by(q, x, f, rng, &m);
      if (parts) {
        todo.push_back(parts->first);
        todo.push_back(parts->second);
        settled = true;
      } else if (static_cast<std::size_t>(m.degree()) == fz.rows() &&
                 is_irreducible(m)) {
        done.push_back(f);  // fz is a field
        settled = true;
      }
    }
    if (!settled) throw Error("failed to split a commutative algebra");
  }
  return done;
}

bool corner_commutative(const FinDimAlgebra& q, const FqMatrix& basis) {
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Vec x(basis.row(i), basis.row(i) + q.dim());
    for (std::size_t j = i + 1; j < basis.rows(); ++j) {
      Vec y(basis.row(j), basis.row(j) + q.dim());
      if (q.mul(x, y) != q.mul(y, x)) return false;
    }
  }
  return true;
}

// Splits f inside a simple component of a semisimple algebra.
void split_simple(const FinDimAlgebra& q, const Vec& f, Rng& rng,
                  std::vector<Vec>& out) {
  FqMatrix cb = row_space(q.left_matrix(f) * q.right_matrix(f));
  if (cb.rows() <= 1 || corner_commutative(q, cb)) {
    out.push_back(f);
    return;
  }
  for (int att = 0; att < kMaxAttempts; ++att) {
    Vec x = random_in_span(cb, rng);
    auto parts = split_by(q, x, f, rng, nullptr);
    if (parts) {
      split_simple(q, parts->first, rng, out);
      split_simple(q, parts->second, rng, out);
      return;
    }
  }
  throw Error("failed to split a simple algebra");
}

struct Labelled {
  Vec e;
  int label;
};

// Primitive decomposition of 1 in a, with labels = simple component of the
// semisimple quotient.
std::vector<Labelled> decompose_one(const FinDimAlgebra& a, Rng& rng) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  FqMatrix j = radical(a);
  Quotient qt = quotient(a, j);
  const FinDimAlgebra& q = qt.algebra;
  std::vector<Vec> central = split_commutative(q, q.center(), q.one(), rng);
  // deterministic component order: by lifted coordinates
  std::sort(central.begin(), central.end());
  std::vector<Labelled> qprims;
  for (std::size_t c = 0; c < central.size(); ++c) {
    std::vector<Vec> parts;
    split_simple(q, central[c], rng, parts);
    for (auto& p : parts) qprims.push_back({std::move(p), static_cast<int>(c)});
  }
  if (j.rows() == 0) return qprims;
  // lift one at a time into the complement of the previous ones
  std::vector<Labelled> out;
  Vec f(n, 0);
  const Field& F = a.field();
  for (std::size_t k = 0; k < qprims.size(); ++k) {
    Vec e;
    if (k + 1 == qprims.size()) {
      e = a.sub(a.one(), f);
    } else {
      Vec cf = a.sub(a.one(), f);
      Vec x = a.mul(a.mul(cf, qt.lift(qprims[k].e)), cf);
      for (int it = 0; it < 64; ++it) {
        Vec x2 = a.mul(x, x);
        if (x2 == x) break;
        Vec x3 = a.mul(x2, x);
        x = a.sub(a.scale(x2, F.from_int(3)), a.scale(x3, F.from_int(2)));
      }
      if (!a.is_idempotent(x)) throw Error("idempotent lifting diverged");
      e = std::move(x);
    }
    f = a.add(f, e);
    out.push_back({std::move(e), qprims[k].label});
  }
  return out;
}

}  // namespace

std::vector<Idempotent> primitive_idempotent_decomposition(
    const FinDimAlgebra& a, const Vec& e, std::uint64_t seed) {
  if (e.size() != a.dim()) throw DimensionMismatch("idempotent");
  if (!a.is_idempotent(e)) throw Error("not an idempotent");
  if (a.is_zero(e)) return {};
  Rng rng(seed);
  std::vector<Idempotent> out;
  auto wrap = [&](std::vector<Labelled> parts, auto&& to_parent) {
    for (auto& p : parts) {
      Idempotent id;
      id.coords = to_parent(p.e);
      id.is_primitive = true;
      id.iso_class = p.label;
      id.is_central = a.is_central(id.coords);
      out.push_back(std::move(id));
    }
  };
  if (e == a.one()) {
    wrap(decompose_one(a, rng), [](const Vec& v) { return v; });
  } else {
    EmbeddedAlgebra c = corner(a, e);
    wrap(decompose_one(c.algebra, rng),
         [&](const Vec& v) { return c.to_parent(v); });
  }
  return out;
}

std::vector<Idempotent> central_primitive_idempotents(const FinDimAlgebra& a,
                                                      std::uint64_t seed) {
  EmbeddedAlgebra z = subalgebra(a, a.center(), a.one());
  Rng rng(seed);
  std::vector<Idempotent> out;
  for (auto& p : decompose_one(z.algebra, rng)) {
    Idempotent id;
    id.coords = z.to_parent(p.e);
    id.is_primitive = false;
    id.is_central = true;
    id.iso_class = static_cast<int>(out.size());
    out.push_back(std::move(id));
  }
  return out;
}

bool is_nondegenerate_form(const FinDimAlgebra& a, const Vec& lambda) {
  const std::size_t n = a.dim();
  const Field& F = a.field();
  FqMatrix g(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Field::Elem* r = a.product_row(i, j);
      Field::Elem s = 0;
      for (std::size_t k = 0; k < n; ++k) s = F.add(s, F.mul(r[k], lambda[k]));
      g(i, j) = s;
    }
  return rank(g) == n;
}

FinDimAlgebra cyclic_nakayama(const Field& f, std::size_t n, std::size_t len) {
  if (n == 0 || len == 0) throw Error("cyclic_nakayama: n and len must be positive");
  // basis index i*len + l: path of length l starting at vertex i
  const std::size_t d = n * len;
  std::vector<Field::Elem> mult(d * d * d, 0);
  Vec one(d, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    one[i * len] = 1;
    for (std::size_t l = 0; l < len; ++l)
      labels.push_back(l == 0 ? "e" + std::to_string(i + 1)
                              : "p" + std::to_string(i + 1) + "_" +
                                    std::to_string(l));
  }
  // (i,l) * (j,m) = (j, l+m) when the path (j,m) ends at vertex i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < len; ++l)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < len; ++m)
          if ((j + m) % n == i && l + m < len)
            mult[((i * len + l) * d + (j * len + m)) * d + (j * len + l + m)] = 1;
  return FinDimAlgebra(f, d, std::move(mult), std::move(one),
                       std::move(labels));
}

}  // namespace blockperm
