#include <immintrin.h>

#include "rankcover/kernels.hpp"

namespace rankcover::kernels::avx2 {

namespace {

struct Lanes {
  __m256i bit[64];
  __m256i mask;
  unsigned m, n;
  explicit Lanes(Shape s) : m(s.m), n(s.n) {
    for (unsigned b = 0; b < m; ++b) bit[b] = _mm256_set1_epi64x(static_cast<long long>(Word(1) << b));
    mask = _mm256_set1_epi64x(static_cast<long long>(m >= 64 ? ~Word(0) : (Word(1) << m) - 1));
  }
};

// four independent branchless GF(2) eliminations, one per 64-bit lane
inline __m256i rank4(__m256i x, const Lanes& L) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i basis[64];
  for (unsigned b = 0; b < L.m; ++b) basis[b] = zero;
  __m256i rank = zero;
  for (unsigned j = 0; j < L.n; ++j) {
    __m256i v = _mm256_and_si256(_mm256_srl_epi64(x, _mm_cvtsi32_si128(static_cast<int>(L.m * j))), L.mask);
    for (int b = static_cast<int>(L.m) - 1; b >= 0; --b) {
      __m256i hb = _mm256_cmpeq_epi64(_mm256_and_si256(v, L.bit[b]), L.bit[b]);
      __m256i empty = _mm256_cmpeq_epi64(basis[b], zero);
      __m256i red = _mm256_andnot_si256(empty, hb);
      __m256i ins = _mm256_and_si256(empty, hb);
      v = _mm256_xor_si256(v, _mm256_and_si256(basis[b], red));
      basis[b] = _mm256_or_si256(basis[b], _mm256_and_si256(v, ins));
      rank = _mm256_sub_epi64(rank, ins);
      v = _mm256_andnot_si256(ins, v);
    }
  }
  return rank;
}

inline __m256i iota4(Word base) {
  return _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(base)), _mm256_set_epi64x(3, 2, 1, 0));
}

inline unsigned lanes_set(__m256i m) {
  return static_cast<unsigned>(__builtin_popcount(_mm256_movemask_pd(_mm256_castsi256_pd(m))));
}

}  // namespace

void rank_batch(Shape s, const Word* in, std::uint8_t* out, std::size_t count) {
  const Lanes L(s);
  std::size_t i = 0;
  alignas(32) Word tmp[4];
  for (; i + 4 <= count; i += 4) {
    __m256i r = rank4(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i)), L);
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), r);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(tmp[k]);
  }
  for (; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_one(in[i], s));
}

void rank_range(Shape s, Word begin, std::uint8_t* out, std::size_t count) {
  const Lanes L(s);
  std::size_t i = 0;
  alignas(32) Word tmp[4];
  for (; i + 4 <= count; i += 4) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), rank4(iota4(begin + i), L));
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(tmp[k]);
  }
  for (; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_one(begin + i, s));
}

std::uint64_t count_intersection(Shape s, Word begin, Word end, Word center, unsigned r, unsigned t) {
  const Lanes L(s);
  const __m256i c = _mm256_set1_epi64x(static_cast<long long>(center));
  const __m256i rlim = _mm256_set1_epi64x(r + 1), tlim = _mm256_set1_epi64x(t + 1);
  std::uint64_t total = 0;
  Word x = begin;
  for (; x + 4 <= end && x + 4 > x; x += 4) {
    __m256i xv = iota4(x);
    __m256i ok1 = _mm256_cmpgt_epi64(rlim, rank4(xv, L));
    __m256i ok2 = _mm256_cmpgt_epi64(tlim, rank4(_mm256_xor_si256(xv, c), L));
    total += lanes_set(_mm256_and_si256(ok1, ok2));
  }
  for (; x < end; ++x) total += (rank_one(x, s) <= r && rank_one(x ^ center, s) <= t);
  return total;
}

std::uint64_t count_rank_at_most(Shape s, Word begin, Word end, unsigned r) {
  const Lanes L(s);
  const __m256i rlim = _mm256_set1_epi64x(r + 1);
  std::uint64_t total = 0;
  Word x = begin;
  for (; x + 4 <= end && x + 4 > x; x += 4) total += lanes_set(_mm256_cmpgt_epi64(rlim, rank4(iota4(x), L)));
  for (; x < end; ++x) total += rank_one(x, s) <= r;
  return total;
}

void min_distance_batch(Shape s, const Word* xs, std::size_t nx, const Word* code, std::size_t nc,
                        unsigned floor, std::uint8_t* out) {
  const Lanes L(s);
  const __m256i fl = _mm256_set1_epi64x(floor);
  alignas(32) Word tmp[4];
  std::size_t i = 0;
  for (; i + 4 <= nx; i += 4) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    __m256i best = _mm256_set1_epi64x(255);
    for (std::size_t k = 0; k < nc; ++k) {
      __m256i d = rank4(_mm256_xor_si256(xv, _mm256_set1_epi64x(static_cast<long long>(code[k]))), L);
      best = _mm256_blendv_epi8(best, d, _mm256_cmpgt_epi64(best, d));
      if (_mm256_movemask_epi8(_mm256_cmpgt_epi64(best, fl)) == 0) break;
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), best);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(tmp[k]);
  }
  if (i < nx) scalar::min_distance_batch(s, xs + i, nx - i, code, nc, floor, out + i);
}

std::uint64_t count_unmarked(const std::uint64_t* bits, Word center, const Word* offsets, std::size_t count) {
  const __m256i c = _mm256_set1_epi64x(static_cast<long long>(center));
  const __m256i low6 = _mm256_set1_epi64x(63), one = _mm256_set1_epi64x(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i idx = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(offsets + i)), c);
    __m256i w = _mm256_i64gather_epi64(reinterpret_cast<const long long*>(bits), _mm256_srli_epi64(idx, 6), 8);
    acc = _mm256_add_epi64(acc, _mm256_and_si256(_mm256_srlv_epi64(w, _mm256_and_si256(idx, low6)), one));
  }
  alignas(32) std::uint64_t tmp[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
  std::uint64_t marked = tmp[0] + tmp[1] + tmp[2] + tmp[3];
  std::uint64_t unmarked = i - marked;
  if (i < count) unmarked += scalar::count_unmarked(bits, center, offsets + i, count - i);
  return unmarked;
}

}  // namespace rankcover::kernels::avx2
