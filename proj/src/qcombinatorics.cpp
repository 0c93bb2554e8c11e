#include "rankcover/qcombinatorics.hpp"

#include <algorithm>
#include <cmath>

#include "rankcover/kernels.hpp"
#include "rankcover/parallel.hpp"

namespace rankcover {

BigCount alpha(unsigned m, unsigned u, unsigned q) {
  if (u > m) return 0;
  BigCount p = 1;
  const BigCount qm = ipow(q, m);
  for (unsigned i = 0; i < u; ++i) p *= qm - ipow(q, i);
  return p;
}

BigCount gaussian(unsigned n, unsigned u, unsigned q) {
  if (u > n) return 0;
  return alpha(n, u, q) / alpha(u, u, q);
}

BigCount num_rank_u(unsigned q, unsigned m, unsigned n, unsigned u) {
  if (u > std::min(m, n)) return 0;
  return gaussian(n, u, q) * alpha(m, u, q);
}

BigCount ball_volume(unsigned q, unsigned m, unsigned n, unsigned r) {
  BigCount v = 0;
  for (unsigned u = 0; u <= std::min({r, m, n}); ++u) v += num_rank_u(q, m, n, u);
  return v;
}

KqApprox kq_constant(unsigned q, double precision) {
  if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const Real eps = std::max(precision, 1e-45);
  KqApprox k;
  k.q = q;
  Real prod = 1, qj = 1;
  const Real qinv = Real(1) / q;
  unsigned j = 0;
  Real tail;
  for (;;) {
    ++j;
    qj *= qinv;
    prod *= 1 - qj;
    tail = qj / (q - 1);  // sum_{i>j} q^{-i}
    if (tail <= eps / 2) break;
  }
  k.value = prod;
  // relative tail bound plus accumulated rounding (50 digits per step)
  k.error_bound = prod * tail + Real(j) * Real("1e-48");
  return k;
}

VolumeBounds volume_bounds(unsigned q, unsigned m, unsigned n, unsigned r) {
  r = std::min({r, m, n});
  VolumeBounds b;
  b.lower = ipow(q, r * (m + n - r));
  b.upper = Real(b.lower) / kq_constant(q).lower();
  return b;
}

BigCount intersection_ball_radius1(unsigned q, unsigned m, unsigned n, unsigned r) {
  if (r < 1 || r > std::min(m, n)) throw std::invalid_argument("need 1 <= r <= min(m,n)");
  return 1 + (ipow(q, m) - ipow(q, r)) * gaussian(r, 1, q) + (ipow(q, r) - 1) * gaussian(n, 1, q);
}

BigCount intersection_complementary(unsigned q, unsigned m, unsigned n, unsigned r, unsigned s) {
  if (s > r || r > std::min(m, n)) throw std::invalid_argument("need 0 <= s <= r <= min(m,n)");
  return ipow(q, s * (r - s)) * gaussian(r, s, q);
}

void check_cap(const BigCount& size, const EnumOptions& opt) {
  if (size > opt.cap) {
    throw CapExceeded("enumeration of " + size.str() + " vectors exceeds the cap of " + std::to_string(opt.cap));
  }
}

RankVector canonical_center(const FieldPtr& f, unsigned n, unsigned d) {
  if (d > std::min(f->m(), n)) throw std::invalid_argument("rank d exceeds min(m,n)");
  std::vector<Word> c(n, 0);
  for (unsigned j = 0; j < d; ++j) c[j] = f->pow(f->alpha(), j);
  return RankVector(f, c);
}

BigCount intersection_count(const RankVector& c1, const RankVector& c2, unsigned r, unsigned s,
                            const EnumOptions& opt) {
  const FieldPtr& f = c1.field();
  const unsigned n = c1.n();
  check_cap(space_size(f->q(), f->m(), n), opt);
  VectorSpace sp(f, n);
  const Word a = sp.index_of(c1), b = sp.index_of(c2);
  // translate so that c1 = 0
  const Word c = sp.sub(b, a);
  std::vector<std::uint64_t> partial(resolve_threads(opt.threads), 0);
  if (sp.packed()) {
    const kernels::Shape shape{f->m(), n};
    parallel_chunks(0, sp.size(), opt.threads, 1 << 16, [&](Word lo, Word hi, unsigned w) {
      partial[w] += kernels::count_intersection(shape, lo, hi, c, r, s);
    });
  } else {
    parallel_chunks(0, sp.size(), opt.threads, 1 << 12, [&](Word lo, Word hi, unsigned w) {
      for (Word x = lo; x < hi; ++x) partial[w] += (sp.rank(x) <= r && sp.distance(x, c) <= s);
    });
  }
  BigCount total = 0;
  for (auto p : partial) total += p;
  return total;
}

BigCount intersection_bruteforce(unsigned q, unsigned m, unsigned n, unsigned r, unsigned s, unsigned d,
                                 const EnumOptions& opt) {
  if (d > r + s) return 0;
  FieldPtr f = default_field(q, m);
  return intersection_count(RankVector::zero(f, n), canonical_center(f, n, d), r, s, opt);
}

std::vector<Word> ball_indices(const VectorSpace& sp, Word center, unsigned r, const EnumOptions& opt) {
  check_cap(sp.size(), opt);
  std::vector<Word> out;
  if (sp.packed()) {
    const kernels::Shape shape{sp.m(), sp.n()};
    std::vector<std::uint8_t> rk(1 << 16);
    for (Word lo = 0; lo < sp.size(); lo += rk.size()) {
      std::size_t cnt = static_cast<std::size_t>(std::min<Word>(rk.size(), sp.size() - lo));
      kernels::rank_range(shape, lo, rk.data(), cnt);
      for (std::size_t i = 0; i < cnt; ++i) {
        if (rk[i] <= r) out.push_back((lo + i) ^ center);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (Word x = 0; x < sp.size(); ++x) {
    if (sp.distance(x, center) <= r) out.push_back(x);
  }
  return out;
}

std::vector<RankVector> ball_enumerate(const RankVector& center, unsigned r, const EnumOptions& opt) {
  VectorSpace sp(center.field(), center.n());
  std::vector<RankVector> out;
  for (Word i : ball_indices(sp, sp.index_of(center), r, opt)) out.push_back(sp.vector_at(i));
  return out;
}

}  // namespace rankcover
