#include "rankcover/rank_space.hpp"

#include <algorithm>

#include "rankcover/kernels.hpp"

namespace rankcover {

namespace {

unsigned inv_mod(unsigned a, unsigned q) {
  unsigned r = 1;
  for (unsigned e = q - 2, b = a % q; e; e >>= 1, b = b * b % q) {
    if (e & 1) r = r * b % q;
  }
  return r;
}

// reduce r against a reduced echelon basis; returns the residue
GfRow reduce_row(GfRow r, const GfMatrix& rref, unsigned q) {
  for (const auto& row : rref) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    unsigned c = r[p];
    if (!c) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (r[j] + (q - c) * row[j]) % q;
  }
  return r;
}

bool is_zero_row(const GfRow& r) {
  return std::all_of(r.begin(), r.end(), [](unsigned v) { return v == 0; });
}

}  // namespace

GfMatrix gf_rref(GfMatrix rows, unsigned q, std::vector<unsigned>* pivots) {
  if (pivots) pivots->clear();
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] % q == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    unsigned iv = inv_mod(rows[r][c] % q, q);
    for (auto& v : rows[r]) v = v % q * iv % q;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      unsigned f = rows[i][c] % q;
      if (!f) continue;
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = (rows[i][j] % q + (q - f) * rows[r][j]) % q;
    }
    if (pivots) pivots->push_back(static_cast<unsigned>(c));
    ++r;
  }
  rows.resize(r);
  return rows;
}

unsigned gf_rank(const GfMatrix& rows, unsigned q) { return static_cast<unsigned>(gf_rref(rows, q).size()); }

GfMatrix gf_inverse(const GfMatrix& a, unsigned q) {
  const std::size_t n = a.size();
  GfMatrix aug(n, GfRow(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw FieldError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j] % q;
    aug[i][n + i] = 1;
  }
  std::vector<unsigned> piv;
  GfMatrix red = gf_rref(aug, q, &piv);
  if (red.size() != n || (n && piv.back() != n - 1)) throw FieldError("matrix is singular");
  GfMatrix inv(n, GfRow(n));
  for (std::size_t i = 0; i < n; ++i) std::copy(red[i].begin() + n, red[i].end(), inv[i].begin());
  return inv;
}

RankVector::RankVector(FieldPtr f, std::vector<Word> coords) : f_(std::move(f)), c_(std::move(coords)) {
  for (Word v : c_) {
    if (v >= f_->order()) throw FieldError("coordinate out of range");
  }
}

RankVector RankVector::zero(FieldPtr f, unsigned n) { return RankVector(std::move(f), std::vector<Word>(n, 0)); }

void RankVector::same_shape(const RankVector& o) const {
  if (c_.size() != o.c_.size()) throw FieldError("length mismatch");
  if (!(*f_ == *o.f_)) throw FieldError("field mismatch");
}

RankVector RankVector::operator+(const RankVector& o) const {
  same_shape(o);
  std::vector<Word> r(c_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = f_->add(c_[j], o.c_[j]);
  return RankVector(f_, std::move(r));
}

RankVector RankVector::operator-(const RankVector& o) const {
  same_shape(o);
  std::vector<Word> r(c_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = f_->sub(c_[j], o.c_[j]);
  return RankVector(f_, std::move(r));
}

RankVector RankVector::scaled(Word a) const {
  std::vector<Word> r(c_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = f_->mul(a, c_[j]);
  return RankVector(f_, std::move(r));
}

bool RankVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Word v) { return v == 0; });
}

GfMatrix RankVector::expansion() const {
  const unsigned m = f_->m();
  GfMatrix a(m, GfRow(c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    for (unsigned i = 0; i < m; ++i) a[i][j] = f_->digit(c_[j], i);
  }
  return a;
}

unsigned rank_weight(const RankVector& x) {
  const FieldPtr& f = x.field();
  if (f->binary()) {
    Word basis[64] = {};
    unsigned r = 0;
    for (Word v : x.coords()) {
      for (int b = static_cast<int>(f->m()) - 1; b >= 0 && v; --b) {
        if (!((v >> b) & 1)) continue;
        if (basis[b]) {
          v ^= basis[b];
        } else {
          basis[b] = v;
          ++r;
          v = 0;
        }
      }
    }
    return r;
  }
  GfMatrix cols;
  for (Word v : x.coords()) cols.push_back(f->expand(v));
  return gf_rank(cols, f->q());
}

unsigned rank_distance(const RankVector& x, const RankVector& y) { return rank_weight(x - y); }

SupportSpace support_space(const RankVector& x) {
  SupportSpace s;
  s.q = x.field()->q();
  s.m = x.field()->m();
  GfMatrix cols;
  for (Word v : x.coords()) cols.push_back(x.field()->expand(v));
  s.basis = gf_rref(cols, s.q);
  return s;
}

Els::Els(unsigned q, unsigned n, GfMatrix rows) : q_(q), n_(n) {
  for (const auto& r : rows) {
    if (r.size() != n) throw FieldError("ELS row has wrong length");
    for (unsigned v : r) {
      if (v >= q) throw FieldError("ELS entry out of range");
    }
  }
  rows_ = gf_rref(std::move(rows), q);
}

Els Els::full(unsigned q, unsigned n) {
  GfMatrix id(n, GfRow(n, 0));
  for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
  return Els(q, n, id);
}

bool Els::contains_row(const GfRow& r) const { return is_zero_row(reduce_row(r, rows_, q_)); }

bool Els::contains(const RankVector& x) const {
  if (x.n() != n_ || x.field()->q() != q_) throw FieldError("shape mismatch");
  for (const auto& row : x.expansion()) {
    if (!contains_row(row)) return false;
  }
  return true;
}

bool Els::subspace_of(const Els& v) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const GfRow& r) { return v.contains_row(r); });
}

Els Els::sum(const Els& o) const {
  GfMatrix all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return Els(q_, n_, all);
}

std::vector<RankVector> Els::members(const FieldPtr& f) const {
  if (f->q() != q_) throw FieldError("field characteristic mismatch");
  std::vector<RankVector> out;
  const std::size_t d = rows_.size();
  std::vector<Word> y(d, 0);
  for (;;) {
    std::vector<Word> c(n_, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (unsigned j = 0; j < n_; ++j) c[j] = f->add(c[j], f->scale(y[i], rows_[i][j]));
    }
    out.emplace_back(f, std::move(c));
    std::size_t k = 0;
    while (k < d && ++y[k] == f->order()) y[k++] = 0;
    if (k == d) break;
  }
  return out;
}

Els unique_els_of(const RankVector& x) { return Els(x.field()->q(), x.n(), x.expansion()); }

std::vector<Els> els_enumerate(unsigned n, unsigned v, unsigned q) {
  std::vector<Els> out;
  if (v > n) return out;
  std::vector<unsigned> piv(v);
  for (unsigned i = 0; i < v; ++i) piv[i] = i;
  for (;;) {
    // free slots: (row i, column j) with j > piv[i] and j not a pivot column
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < v; ++i) {
      for (unsigned j = piv[i] + 1; j < n; ++j) {
        if (!std::binary_search(piv.begin(), piv.end(), j)) free.emplace_back(i, j);
      }
    }
    std::vector<unsigned> val(free.size(), 0);
    for (;;) {
      GfMatrix rows(v, GfRow(n, 0));
      for (unsigned i = 0; i < v; ++i) rows[i][piv[i]] = 1;
      for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = val[k];
      out.emplace_back(q, n, rows);
      std::size_t k = 0;
      while (k < val.size() && ++val[k] == q) val[k++] = 0;
      if (k == val.size()) break;
    }
    // next pivot combination
    int i = static_cast<int>(v) - 1;
    while (i >= 0 && piv[i] == n - v + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned k = i + 1; k < v; ++k) piv[k] = piv[k - 1] + 1;
  }
  return out;
}

std::vector<Els> els_complements(const Els& a, const Els& v) {
  if (a.q() != v.q() || a.n() != v.n()) throw FieldError("shape mismatch");
  if (!a.subspace_of(v)) throw FieldError("A is not contained in V");
  const unsigned q = v.q(), n = v.n(), dv = v.dim(), d = dv - a.dim();
  std::vector<Els> out;
  for (const Els& w : els_enumerate(dv, d, q)) {
    GfMatrix rows(d, GfRow(n, 0));
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned k = 0; k < dv; ++k) {
        unsigned c = w.basis()[i][k];
        if (!c) continue;
        for (unsigned j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + c * v.basis()[k][j]) % q;
      }
    }
    Els b(q, n, rows);
    if (a.sum(b).dim() == dv) out.push_back(std::move(b));
  }
  return out;
}

std::pair<RankVector, RankVector> project(const RankVector& x, const Els& a, const Els& b) {
  const FieldPtr& f = x.field();
  const unsigned q = f->q(), n = x.n();
  if (a.n() != n || b.n() != n || a.q() != q || b.q() != q) throw FieldError("shape mismatch");
  const unsigned da = a.dim(), db = b.dim();
  GfMatrix m = a.basis();
  m.insert(m.end(), b.basis().begin(), b.basis().end());
  if (gf_rank(m, q) != da + db) throw FieldError("A and B do not form a direct sum");
  for (unsigned j = 0; j < n && m.size() < n; ++j) {
    GfRow e(n, 0);
    e[j] = 1;
    m.push_back(e);
    if (gf_rank(m, q) != m.size()) m.pop_back();
  }
  const GfMatrix inv = gf_inverse(m, q);
  std::vector<Word> y(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) y[i] = f->add(y[i], f->scale(x[j], inv[j][i]));
  }
  for (unsigned i = da + db; i < n; ++i) {
    if (y[i] != 0) throw FieldError("vector is not in A + B");
  }
  std::vector<Word> xa(n, 0), xb(n, 0);
  for (unsigned i = 0; i < da + db; ++i) {
    auto& dst = i < da ? xa : xb;
    for (unsigned j = 0; j < n; ++j) dst[j] = f->add(dst[j], f->scale(y[i], m[i][j]));
  }
  return {RankVector(f, xa), RankVector(f, xb)};
}

BigCount space_size(unsigned q, unsigned m, unsigned n) { return ipow(q, m * n); }

VectorSpace::VectorSpace(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n), qm_(f_->order()) {
  if (space_size(f_->q(), f_->m(), n) >= (BigCount(1) << 63)) throw FieldError("vector space too large to index");
  size_ = 1;
  for (unsigned j = 0; j < n; ++j) size_ *= qm_;
}

Word VectorSpace::index_of(const RankVector& x) const {
  if (x.n() != n_) throw FieldError("length mismatch");
  Word i = 0;
  for (Word v : x.coords()) i = i * qm_ + v;
  return i;
}

RankVector VectorSpace::vector_at(Word i) const {
  if (i >= size_) throw FieldError("index out of range");
  std::vector<Word> c(n_);
  for (int j = static_cast<int>(n_) - 1; j >= 0; --j) {
    c[j] = i % qm_;
    i /= qm_;
  }
  return RankVector(f_, std::move(c));
}

Word VectorSpace::coord(Word i, unsigned j) const {
  if (packed()) return (i >> (m() * (n_ - 1 - j))) & (qm_ - 1);
  for (unsigned k = j + 1; k < n_; ++k) i /= qm_;
  return i % qm_;
}

Word VectorSpace::add(Word a, Word b) const {
  if (packed()) return a ^ b;
  Word r = 0;
  for (unsigned j = 0; j < n_; ++j) r = r * qm_ + f_->add(coord(a, j), coord(b, j));
  return r;
}

Word VectorSpace::sub(Word a, Word b) const {
  if (packed()) return a ^ b;
  Word r = 0;
  for (unsigned j = 0; j < n_; ++j) r = r * qm_ + f_->sub(coord(a, j), coord(b, j));
  return r;
}

unsigned VectorSpace::rank(Word i) const {
  if (packed()) return kernels::rank_one(i, {m(), n_});
  return rank_weight(vector_at(i));
}

}  // namespace rankcover
