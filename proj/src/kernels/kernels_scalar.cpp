#include "rankcover/kernels.hpp"

namespace rankcover::kernels::scalar {

void rank_batch(Shape s, const Word* in, std::uint8_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_one(in[i], s));
}

void rank_range(Shape s, Word begin, std::uint8_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_one(begin + i, s));
}

std::uint64_t count_intersection(Shape s, Word begin, Word end, Word center, unsigned r, unsigned t) {
  std::uint64_t c = 0;
  for (Word x = begin; x < end; ++x) {
    if (rank_one(x, s) <= r && rank_one(x ^ center, s) <= t) ++c;
  }
  return c;
}

std::uint64_t count_rank_at_most(Shape s, Word begin, Word end, unsigned r) {
  std::uint64_t c = 0;
  for (Word x = begin; x < end; ++x) c += rank_one(x, s) <= r;
  return c;
}

void min_distance_batch(Shape s, const Word* xs, std::size_t nx, const Word* code, std::size_t nc,
                        unsigned floor, std::uint8_t* out) {
  for (std::size_t i = 0; i < nx; ++i) {
    unsigned best = 255;
    for (std::size_t k = 0; k < nc && best > floor; ++k) {
      unsigned d = rank_one(xs[i] ^ code[k], s);
      if (d < best) best = d;
    }
    out[i] = static_cast<std::uint8_t>(best);
  }
}

std::uint64_t count_unmarked(const std::uint64_t* bits, Word center, const Word* offsets, std::size_t count) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Word x = center ^ offsets[i];
    c += ((bits[x >> 6] >> (x & 63)) & 1) ^ 1;
  }
  return c;
}

}  // namespace rankcover::kernels::scalar
