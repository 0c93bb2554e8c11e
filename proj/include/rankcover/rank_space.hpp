#pragma once

#include <utility>
#include <vector>

#include "rankcover/bigcount.hpp"
#include "rankcover/finite_field.hpp"

namespace rankcover {

using GfRow = std::vector<unsigned>;  // vector over GF(q)
using GfMatrix = std::vector<GfRow>;

/// Reduced row echelon form over GF(q); zero rows dropped. pivots (optional) receives pivot columns.
GfMatrix gf_rref(GfMatrix rows, unsigned q, std::vector<unsigned>* pivots = nullptr);
unsigned gf_rank(const GfMatrix& rows, unsigned q);
/// Inverse of a square matrix over GF(q); throws if singular.
GfMatrix gf_inverse(const GfMatrix& a, unsigned q);

class RankVector {
 public:
  RankVector(FieldPtr f, std::vector<Word> coords);
  static RankVector zero(FieldPtr f, unsigned n);

  const FieldPtr& field() const { return f_; }
  unsigned n() const { return static_cast<unsigned>(c_.size()); }
  const std::vector<Word>& coords() const { return c_; }
  Word operator[](unsigned j) const { return c_[j]; }

  RankVector operator+(const RankVector& o) const;
  RankVector operator-(const RankVector& o) const;
  RankVector scaled(Word a) const;
  bool operator==(const RankVector& o) const { return c_ == o.c_ && *f_ == *o.f_; }
  bool operator!=(const RankVector& o) const { return !(*this == o); }
  bool is_zero() const;

  /// m x n matrix over GF(q); column j = expand(x_j)
  GfMatrix expansion() const;

 private:
  void same_shape(const RankVector& o) const;
  FieldPtr f_;
  std::vector<Word> c_;
};

unsigned rank_weight(const RankVector& x);
unsigned rank_distance(const RankVector& x, const RankVector& y);

/// 𝔖(x): GF(q)-span of the coordinates of x inside GF(q^m), as coefficient vectors
struct SupportSpace {
  unsigned q = 2, m = 0;
  GfMatrix basis;
  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
};
SupportSpace support_space(const RankVector& x);

/// Elementary linear subspace: GF(q^m)-span of rows in GF(q)^n, kept in reduced echelon form.
class Els {
 public:
  Els(unsigned q, unsigned n, GfMatrix rows = {});
  static Els full(unsigned q, unsigned n);

  unsigned q() const { return q_; }
  unsigned n() const { return n_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const GfMatrix& basis() const { return rows_; }

  bool contains_row(const GfRow& r) const;
  bool contains(const RankVector& x) const;
  bool subspace_of(const Els& v) const;
  Els sum(const Els& o) const;
  /// all q^{m*dim} members over the given field
  std::vector<RankVector> members(const FieldPtr& f) const;

  bool operator==(const Els& o) const { return q_ == o.q_ && n_ == o.n_ && rows_ == o.rows_; }
  bool operator<(const Els& o) const { return rows_ < o.rows_; }

 private:
  unsigned q_, n_;
  GfMatrix rows_;
};

Els unique_els_of(const RankVector& x);
std::vector<Els> els_enumerate(unsigned n, unsigned v, unsigned q);
/// all B inside V with A + B = V and A ∩ B = 0
std::vector<Els> els_complements(const Els& a, const Els& v);
/// x = x_A + x_B with x_A ∈ A, x_B ∈ B
std::pair<RankVector, RankVector> project(const RankVector& x, const Els& a, const Els& b);

/// Integer labelling of GF(q^m)^n: coordinate 0 is the most significant base-q^m digit.
/// Requires q^{mn} < 2^64. For q = 2 indices are bit-packed and subtraction is XOR.
class VectorSpace {
 public:
  VectorSpace(FieldPtr f, unsigned n);

  const FieldPtr& field() const { return f_; }
  unsigned q() const { return f_->q(); }
  unsigned m() const { return f_->m(); }
  unsigned n() const { return n_; }
  Word size() const { return size_; }
  bool packed() const { return f_->q() == 2; }

  Word index_of(const RankVector& x) const;
  RankVector vector_at(Word i) const;
  Word coord(Word i, unsigned j) const;
  Word add(Word a, Word b) const;
  Word sub(Word a, Word b) const;
  unsigned rank(Word i) const;
  unsigned distance(Word a, Word b) const { return rank(sub(a, b)); }

 private:
  FieldPtr f_;
  unsigned n_;
  Word size_;
  Word qm_;
};

BigCount space_size(unsigned q, unsigned m, unsigned n);

}  // namespace rankcover
