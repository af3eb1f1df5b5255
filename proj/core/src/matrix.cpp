#include "blockperm/matrix.hpp"

#include <algorithm>
#include <limits>

namespace blockperm {

namespace {

void check_same_field(const FqMatrix& a, const FqMatrix& b) {
  if (a.field_ptr() != b.field_ptr()) throw FieldMismatch();
}

}  // namespace

FqMatrix::FqMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(const Field& f, std::size_t n) {
  FqMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_ints(const Field& f,
                             const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  FqMatrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      long long v = rows[i][j];
      if (v >= 0 && v < static_cast<long long>(f.q()))
        m(i, j) = static_cast<Elem>(v);
      else
        m(i, j) = f.from_int(v);
    }
  }
  return m;
}

FqMatrix FqMatrix::permutation(const Field& f,
                               const std::vector<std::uint32_t>& images) {
  FqMatrix m(f, images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) m(i, images[i]) = 1;
  return m;
}

FqMatrix FqMatrix::random(const Field& f, std::size_t rows, std::size_t cols,
                          Rng& rng) {
  FqMatrix m(f, rows, cols);
  for (auto& x : m.data_) x = static_cast<Elem>(rng() % f.q());
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  const Field& f = *field_;
  FqMatrix r(f, rows_, o.cols_);
  const std::size_t n = o.cols_;
  if (n == 0 || rows_ == 0) return r;
  if (f.is_prime()) {
    // delayed reduction: accumulate in 32 bits as long as it cannot overflow
    const std::uint32_t p = f.p();
    const std::uint64_t step = std::uint64_t(p - 1) * (p - 1);
    const std::size_t limit =
        step == 0 ? std::numeric_limits<std::size_t>::max()
                  : static_cast<std::size_t>(
                        (std::numeric_limits<std::uint32_t>::max() - p) / step);
    std::vector<std::uint32_t> acc(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::size_t pending = 0;
      const Elem* a = row(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint32_t c = a[k];
        if (c == 0) continue;
        const Elem* b = o.row(k);
        for (std::size_t j = 0; j < n; ++j) acc[j] += c * b[j];
        if (++pending == limit) {
          for (auto& x : acc) x %= p;
          pending = 0;
        }
      }
      Elem* out = r.row(i);
      for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<Elem>(acc[j] % p);
    }
    return r;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    const Elem* a = row(i);
    Elem* out = r.row(i);
    for (std::size_t k = 0; k < cols_; ++k)
      if (a[k]) f.axpy(out, o.row(k), a[k], n);
  }
  return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  FqMatrix r = *this;
  r += o;
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  FqMatrix r = *this;
  r.add_scaled(o, field_->neg(1));
  return r;
}

FqMatrix& FqMatrix::operator+=(const FqMatrix& o) {
  add_scaled(o, 1);
  return *this;
}

void FqMatrix::add_scaled(const FqMatrix& o, Elem c) {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sum");
  field_->axpy(data_.data(), o.data_.data(), c, data_.size());
}

FqMatrix FqMatrix::scaled(Elem c) const {
  FqMatrix r = *this;
  field_->scale(r.data_.data(), c, r.data_.size());
  return r;
}

FqMatrix FqMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  FqMatrix r(*field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy(row(idx[i]), row(idx[i]) + cols_, r.row(i));
  return r;
}

FqMatrix FqMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionMismatch("block out of range");
  FqMatrix r(*field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy(row(r0 + i) + c0, row(r0 + i) + c0 + nc, r.row(i));
  return r;
}

FqMatrix FqMatrix::vstack(const FqMatrix& o) const {
  if (o.rows_ == 0) return *this;
  if (rows_ == 0 && field_ == nullptr) return o;
  check_same_field(*this, o);
  if (cols_ != o.cols_) throw DimensionMismatch("vstack");
  FqMatrix r = *this;
  r.data_.insert(r.data_.end(), o.data_.begin(), o.data_.end());
  r.rows_ += o.rows_;
  return r;
}

FqMatrix FqMatrix::hstack(const FqMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_) throw DimensionMismatch("hstack");
  FqMatrix r(*field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, r.row(i));
    std::copy(o.row(i), o.row(i) + o.cols_, r.row(i) + cols_);
  }
  return r;
}

void FqMatrix::append_row(const Elem* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

std::vector<FqMatrix::Elem> FqMatrix::mul_vec(const Elem* v) const {
  std::vector<Elem> out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k)
    if (v[k]) field_->axpy(out.data(), row(k), v[k], cols_);
  return out;
}

FqMatrix::Elem FqMatrix::trace() const {
  Elem t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t = field_->add(t, (*this)(i, i));
  return t;
}

std::vector<std::string> FqMatrix::dump() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::string s;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_->q() <= 10) {
        s.push_back(static_cast<char>('0' + (*this)(i, j)));
      } else {
        if (j) s.push_back(' ');
        s += std::to_string((*this)(i, j));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

RrefResult rref(const FqMatrix& m) {
  RrefResult res{m, {}, 0};
  FqMatrix& a = res.matrix;
  if (m.field_ptr() == nullptr) return res;
  const Field& f = m.field();
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      std::swap_ranges(a.row(piv), a.row(piv) + nc, a.row(r));
    f.scale(a.row(r) + c, f.inv(a(r, c)), nc - c);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a(i, c) == 0) continue;
      f.axpy(a.row(i) + c, a.row(r) + c, f.neg(a(i, c)), nc - c);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FqMatrix& m) {
  if (m.field_ptr() == nullptr) return 0;
  EchelonSpace es(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) es.add(m.row(i));
  return es.dim();
}

FqMatrix nullspace_basis(const FqMatrix& m) {
  const Field& f = m.field();
  auto r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  FqMatrix basis(f, 0, nc);
  std::vector<FqMatrix::Elem> v(nc);
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = f.neg(r.matrix(i, free));
    basis.append_row(v);
  }
  return basis;
}

FqMatrix left_nullspace_basis(const FqMatrix& m) {
  return nullspace_basis(m.transpose());
}

std::optional<FqMatrix> solve(const FqMatrix& a, const FqMatrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: a.rows != b.rows");
  const Field& f = a.field();
  auto r = rref(a.hstack(b));
  const std::size_t n = a.cols();
  FqMatrix x(f, n, b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t c = r.pivots[i];
    if (c >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = r.matrix(i, n + j);
  }
  return x;
}

std::optional<FqMatrix> solve_left(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols())
    throw DimensionMismatch("solve_left: a.cols != b.cols");
  auto x = solve(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

std::optional<FqMatrix> inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = m.rows();
  auto r = rref(m.hstack(FqMatrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  return r.matrix.block(0, n, n, n);
}

FqMatrix spin_basis(const FqMatrix& vectors,
                    const std::vector<FqMatrix>& action) {
  const Field& f = vectors.field();
  const std::size_t n = vectors.cols();
  for (const auto& a : action)
    if (a.rows() != n || a.cols() != n)
      throw DimensionMismatch("spin: action size");
  EchelonSpace es(f, n);
  for (std::size_t i = 0; i < vectors.rows(); ++i) es.add(vectors.row(i));
  for (std::size_t k = 0; k < es.dim() && es.dim() < n; ++k) {
    std::vector<FqMatrix::Elem> v(es.inserted().row(k),
                                  es.inserted().row(k) + n);
    for (const auto& a : action) {
      es.add(a.mul_vec(v));
      if (es.dim() == n) break;
    }
  }
  return es.inserted();
}

FqMatrix row_space(const FqMatrix& m) {
  auto r = rref(m);
  return r.matrix.block(0, 0, r.rank, m.cols());
}

FqMatrix intersect_row_spaces(const FqMatrix& a, const FqMatrix& b) {
  // v = x*A = y*B  <=>  [x | -y] in left nullspace of [A ; B]
  const Field& f = a.field();
  FqMatrix ra = row_space(a), rb = row_space(b);
  FqMatrix stacked = ra.vstack(rb);
  FqMatrix ker = left_nullspace_basis(stacked);
  FqMatrix out(f, 0, a.cols());
  if (ker.rows() == 0) return out;
  FqMatrix x = ker.block(0, 0, ker.rows(), ra.rows());
  return row_space(x * ra);
}

EchelonSpace::EchelonSpace(const Field& f, std::size_t ambient, bool track)
    : field_(&f), n_(ambient), track_(track), inserted_(f, 0, ambient) {}

bool EchelonSpace::reduce(Elem* v) const {
  const Field& f = *field_;
  bool zero = true;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Elem c = v[pivots_[r]];
    if (c) f.axpy(v, rows_[r].data(), f.neg(c), n_);
  }
  for (std::size_t j = 0; j < n_; ++j)
    if (v[j]) {
      zero = false;
      break;
    }
  return zero;
}

bool EchelonSpace::contains(const Elem* v) const {
  std::vector<Elem> w(v, v + n_);
  return reduce(w.data());
}

bool EchelonSpace::add(const Elem* v) {
  const Field& f = *field_;
  std::vector<Elem> w(v, v + n_);
  std::vector<Elem> e;
  const std::size_t k = rows_.size();
  if (track_) e.assign(n_, 0);
  for (std::size_t r = 0; r < k; ++r) {
    Elem c = w[pivots_[r]];
    if (!c) continue;
    Elem nc = f.neg(c);
    f.axpy(w.data(), rows_[r].data(), nc, n_);
    if (track_) f.axpy(e.data(), expr_[r].data(), nc, k);
  }
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  Elem s = f.inv(w[piv]);
  f.scale(w.data(), s, n_);
  if (track_) {
    e[k] = 1;
    f.scale(e.data(), s, k + 1);
    expr_.push_back(std::move(e));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  inserted_.append_row(v);
  return true;
}

std::optional<std::vector<EchelonSpace::Elem>> EchelonSpace::coords(
    const Elem* v) const {
  if (!track_) throw Error("EchelonSpace::coords requires tracking");
  const Field& f = *field_;
  const std::size_t k = rows_.size();
  std::vector<Elem> w(v, v + n_);
  std::vector<Elem> acc(k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    Elem c = w[pivots_[r]];
    if (!c) continue;
    f.axpy(w.data(), rows_[r].data(), f.neg(c), n_);
    f.axpy(acc.data(), expr_[r].data(), c, r + 1);
  }
  for (std::size_t j = 0; j < n_; ++j)
    if (w[j]) return std::nullopt;
  return acc;
}

FqMatrix EchelonSpace::echelon() const {
  FqMatrix m(*field_, 0, n_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

}  // namespace blockperm
