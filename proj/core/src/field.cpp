#include "blockperm/field.hpp"

#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace blockperm {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Conway polynomials for the non-prime fields with q <= 256, lowest degree
// first (Luebeck's tables).
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>&
conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>
      table = {
          {{2, 2}, {1, 1, 1}},
          {{2, 3}, {1, 1, 0, 1}},
          {{2, 4}, {1, 1, 0, 0, 1}},
          {{2, 5}, {1, 0, 1, 0, 0, 1}},
          {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
          {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
          {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
          {{3, 2}, {2, 2, 1}},
          {{3, 3}, {1, 2, 0, 1}},
          {{3, 4}, {2, 0, 0, 2, 1}},
          {{3, 5}, {1, 2, 0, 0, 0, 1}},
          {{5, 2}, {2, 4, 1}},
          {{5, 3}, {3, 3, 0, 1}},
          {{7, 2}, {3, 6, 1}},
          {{11, 2}, {2, 7, 1}},
          {{13, 2}, {2, 12, 1}},
      };
  return table;
}

unsigned least_primitive_root(unsigned p) {
  if (p == 2) return 1;
  std::vector<unsigned> factors;
  unsigned m = p - 1;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  auto powmod = [p](unsigned long long b, unsigned long long n) {
    unsigned long long r = 1;
    b %= p;
    while (n) {
      if (n & 1) r = r * b % p;
      b = b * b % p;
      n >>= 1;
    }
    return r;
  };
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned f : factors)
      if (powmod(g, (p - 1) / f) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

}  // namespace

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  auto digits = [&](unsigned x) {
    std::vector<unsigned> d(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned x = 0;
    for (unsigned i = e_; i-- > 0;) x = x * p_ + d[i];
    return x;
  };

  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<unsigned> dn(e_);
    for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(encode(dn));
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<unsigned> ds(e_);
      for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<Elem>(encode(ds));
      // polynomial product reduced by the monic modulus
      std::vector<unsigned> prod(2 * e_, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned k = 2 * e_ - 1; k >= e_ && k < 2 * e_; --k) {
        unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= e_; ++i) {
          unsigned t = (c * modulus_[i]) % p_;
          prod[k - e_ + i] = (prod[k - e_ + i] + p_ - t) % p_;
        }
      }
      prod.resize(e_);
      mul_[a * q_ + b] = static_cast<Elem>(encode(prod));
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
  if (e_ == 1) {
    generator_ = static_cast<Elem>(least_primitive_root(p_));
  } else {
    generator_ = static_cast<Elem>(p_);  // the residue class of x
  }
}

const Field& Field::get(unsigned p, unsigned e) {
  if (!blockperm::is_prime(p)) throw Error("field characteristic " + std::to_string(p) +
                                " is not prime");
  if (e == 0) throw Error("field extension degree must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > 256) throw Error("fields with more than 256 elements unsupported");
  }
  static std::mutex mu;
  static std::array<std::unique_ptr<Field>, 257> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[q];
  if (!slot) {
    std::vector<unsigned> modulus;
    if (e == 1) {
      unsigned g = least_primitive_root(p);
      modulus = {(p - g) % p, 1};
    } else {
      auto it = conway_table().find({p, e});
      if (it == conway_table().end())
        throw Error("no Conway polynomial tabulated for GF(" +
                    std::to_string(p) + "^" + std::to_string(e) + ")");
      modulus = it->second;
    }
    slot.reset(new Field(p, e, std::move(modulus)));
  }
  return *slot;
}

const Field& Field::parse(std::string_view spec) {
  std::string s(spec);
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') s = s.substr(3, s.size() - 4);
  auto to_uint = [&](std::string_view t) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw ParseError("bad field spec '" + std::string(spec) + "'");
    return v;
  };
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    return get(to_uint(std::string_view(s).substr(0, caret)),
               to_uint(std::string_view(s).substr(caret + 1)));
  }
  unsigned q = to_uint(s);
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return get(p, e);
  }
  throw ParseError("field size " + s + " is not a prime power");
}

std::string Field::name() const {
  if (e_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(e_);
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in GF(" + name() + ")");
  return inv_[a];
}

Field::Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Field::Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

void Field::axpy(Elem* dst, const Elem* src, Elem c, std::size_t n) const {
  if (c == 0) return;
  const Elem* mc = mul_row(c);
  if (e_ == 1) {
    const unsigned p = p_;
    if (c == 1) {
      for (std::size_t k = 0; k < n; ++k) {
        unsigned t = unsigned(dst[k]) + src[k];
        dst[k] = static_cast<Elem>(t >= p ? t - p : t);
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        unsigned t = unsigned(dst[k]) + mc[src[k]];
        dst[k] = static_cast<Elem>(t >= p ? t - p : t);
      }
    }
    return;
  }
  const Elem* ad = add_.data();
  const unsigned q = q_;
  for (std::size_t k = 0; k < n; ++k) dst[k] = ad[dst[k] * q + mc[src[k]]];
}

void Field::scale(Elem* dst, Elem c, std::size_t n) const {
  if (c == 1) return;
  const Elem* mc = mul_row(c);
  for (std::size_t k = 0; k < n; ++k) dst[k] = mc[dst[k]];
}

FqElem FqElem::operator+(const FqElem& o) const {
  if (field != o.field) throw FieldMismatch();
  return {*field, field->add(value, o.value)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  if (field != o.field) throw FieldMismatch();
  return {*field, field->sub(value, o.value)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  if (field != o.field) throw FieldMismatch();
  return {*field, field->mul(value, o.value)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  if (field != o.field) throw FieldMismatch();
  return {*field, field->div(value, o.value)};
}

}  // namespace blockperm
