#include "blockperm/poly.hpp"

#include <algorithm>
#include <map>

namespace blockperm {

Poly::Poly(const Field& f, std::vector<Elem> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch();
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_->add((*this)[i], o[i]);
  return Poly(*field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch();
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_->sub((*this)[i], o[i]);
  return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch();
  if (is_zero() || o.is_zero()) return Poly(*field_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) field_->axpy(r.data() + i, o.c_.data(), c_[i], o.c_.size());
  return Poly(*field_, std::move(r));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> r = c_;
  field_->scale(r.data(), s, r.size());
  return Poly(*field_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(*field_);
  std::vector<Elem> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), c_[i]);
  return Poly(*field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (field_ != d.field_) throw FieldMismatch();
  if (d.is_zero()) throw Error("polynomial division by zero");
  const Field& f = *field_;
  if (degree() < d.degree()) return {Poly(f), *this};
  std::vector<Elem> r = c_;
  const std::size_t dn = d.c_.size();
  std::vector<Elem> q(r.size() - dn + 1, 0);
  const Elem li = f.inv(d.lead());
  for (std::size_t k = q.size(); k-- > 0;) {
    Elem c = f.mul(r[k + dn - 1], li);
    q[k] = c;
    if (c) f.axpy(r.data() + k, d.c_.data(), f.neg(c), dn);
  }
  r.resize(dn - 1);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, unsigned long long n, const Poly& m) {
  const Field& f = base.field();
  Poly r = Poly::constant(f, 1) % m;
  Poly b = base % m;
  while (n) {
    if (n & 1) r = (r * b) % m;
    n >>= 1;
    if (n) b = (b * b) % m;
  }
  return r;
}

namespace {

// g with g^p = f, for f a polynomial in x^p.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const unsigned p = F.p();
  std::vector<Field::Elem> r(f.coeffs().size() / p + 1, 0);
  const std::uint64_t root_exp = F.q() / p;  // a^(q/p) is the p-th root
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    r[i / p] = F.pow(f.coeffs()[i], root_exp);
  return Poly(F, std::move(r));
}

void squarefree_rec(const Poly& f, int mult, std::vector<Factor>& out) {
  const Field& F = f.field();
  if (f.degree() <= 0) return;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_rec(pth_root(f), mult * static_cast<int>(F.p()), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0)
    squarefree_rec(pth_root(c.monic()), mult * static_cast<int>(F.p()), out);
}

// Splits f (square-free, all irreducible factors of degree d) completely.
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  const Field& F = f.field();
  const int n = f.degree();
  if (n <= 0) return;
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  const unsigned q = F.q();
  for (;;) {
    std::vector<Field::Elem> a(n);
    for (auto& x : a) x = static_cast<Field::Elem>(rng() % q);
    Poly ap(F, a);
    if (ap.degree() <= 0) continue;
    Poly b(F);
    if (q % 2 == 1) {
      // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly t = ap, s = ap;
      for (int j = 1; j < d; ++j) {
        t = powmod(t, q, f);
        s = (s * t) % f;
      }
      b = powmod(s, (q - 1) / 2, f) - Poly::constant(F, 1);
    } else {
      // absolute trace a + a^2 + ... + a^(2^(k d - 1)), q = 2^k
      const int steps = static_cast<int>(F.e()) * d;
      Poly t = ap;
      b = ap;
      for (int j = 1; j < steps; ++j) {
        t = (t * t) % f;
        b = b + t;
      }
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> squarefree_factorization(const Poly& f) {
  std::vector<Factor> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<Factor> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  const Field& F = f.field();
  std::map<Poly, int> acc;
  for (const auto& sf : squarefree_factorization(f)) {
    Poly g = sf.poly;
    Poly h = Poly::x(F);
    const Poly x = Poly::x(F);
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, F.q(), g);
      Poly e = gcd(g, h - x);
      if (e.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree(e, d, rng, parts);
        for (auto& p : parts) acc[p] += sf.multiplicity;
        g = g / e;
        h = h % g;
      }
    }
    if (g.degree() > 0) acc[g.monic()] += sf.multiplicity;
  }
  std::vector<Factor> out;
  for (auto& [p, m] : acc) out.push_back({p, m});
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  const Field& F = f.field();
  Poly g = f.monic();
  if (gcd(g, g.derivative()).degree() > 0) return false;
  Poly h = Poly::x(F);
  const Poly x = Poly::x(F);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, F.q(), g);
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

Poly char_poly(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly");
  const Field& F = m.field();
  const std::size_t n = m.rows();
  FqMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const Field::Elem inv = F.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      Field::Elem u = F.mul(h(r, j), inv);
      if (!u) continue;
      F.axpy(h.row(r), h.row(j + 1), F.neg(u), n);
      for (std::size_t c = 0; c < n; ++c)
        h(c, j + 1) = F.add(h(c, j + 1), F.mul(u, h(c, r)));
    }
  }
  // recurrence on leading principal submatrices of the Hessenberg form
  std::vector<Poly> p;
  p.push_back(Poly::constant(F, 1));
  const Poly x = Poly::x(F);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = (x - Poly::constant(F, h(k - 1, k - 1))) * p[k - 1];
    Field::Elem t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, h(k - i, k - i - 1));
      if (!t) break;
      Field::Elem c = F.mul(t, h(k - i - 1, k - 1));
      if (c) pk = pk - p[k - i - 1].scaled(c);
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

Poly local_min_poly(const FqMatrix& m, const std::vector<Field::Elem>& v) {
  const Field& F = m.field();
  const std::size_t n = m.rows();
  EchelonSpace es(F, n, true);
  std::vector<Field::Elem> w = v;
  while (es.add(w)) w = m.mul_vec(w);
  auto c = es.coords(w.data());
  // w = v m^k = sum c_j v m^j
  std::vector<Field::Elem> coeffs;
  coeffs.reserve(c->size() + 1);
  for (auto x : *c) coeffs.push_back(F.neg(x));
  coeffs.push_back(1);
  return Poly(F, std::move(coeffs));
}

Poly min_poly(const FqMatrix& m) {
  const Field& F = m.field();
  const std::size_t n = m.rows();
  Poly u = Poly::constant(F, 1);
  std::vector<Field::Elem> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    // e * u(m) by Horner
    std::vector<Field::Elem> acc(n, 0);
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
      acc = m.mul_vec(acc);
      F.axpy(acc.data(), e.data(), u.coeffs()[k], n);
    }
    bool zero = std::all_of(acc.begin(), acc.end(),
                            [](Field::Elem x) { return x == 0; });
    if (zero) continue;
    Poly g = local_min_poly(m, e);
    u = (u * g) / gcd(u, g);
    u = u.monic();
  }
  return u;
}

FqMatrix eval_matrix(const Poly& g, const FqMatrix& m) {
  const Field& F = m.field();
  const std::size_t n = m.rows();
  FqMatrix r(F, n, n);
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    r = r * m;
    Field::Elem c = g.coeffs()[k];
    if (c)
      for (std::size_t i = 0; i < n; ++i) r(i, i) = F.add(r(i, i), c);
  }
  return r;
}

}  // namespace blockperm
