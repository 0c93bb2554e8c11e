#pragma once
// Bit-packed GF(2) kernels over vector indices (q = 2, m*n <= 63).
// A vector index packs n chunks of m bits; rank = GF(2) rank of the chunks.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rankcover/finite_field.hpp"

namespace rankcover::kernels {

struct Shape {
  unsigned m = 0, n = 0;
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
/// best supported ISA unless overridden
Isa active_isa();
/// force a specific ISA (tests, benchmarks); nullopt restores auto-selection
void set_isa_override(std::optional<Isa> isa);

inline unsigned rank_one(Word x, Shape s) {
  Word basis[64] = {};
  const Word mask = (s.m >= 64) ? ~Word(0) : ((Word(1) << s.m) - 1);
  unsigned r = 0;
  for (unsigned j = 0; j < s.n; ++j) {
    Word v = (x >> (s.m * j)) & mask;
    for (int b = static_cast<int>(s.m) - 1; b >= 0 && v; --b) {
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

// rank_batch:          out[i] = rank(in[i])
// rank_range:          out[i] = rank(begin + i)
// count_intersection:  #{x in [begin,end) : rank(x) <= r and rank(x ^ center) <= t}
// count_rank_at_most:  #{x in [begin,end) : rank(x) <= r}
// min_distance_batch:  out[i] = min_c rank(xs[i] ^ c) when that exceeds floor; otherwise the scan
//                      may stop early and out[i] is some value <= floor
// count_unmarked:      #{e in offsets : bit (center ^ e) of the bitmap is clear}
#define RANKCOVER_KERNEL_DECLS                                                                       \
  void rank_batch(Shape s, const Word* in, std::uint8_t* out, std::size_t count);                    \
  void rank_range(Shape s, Word begin, std::uint8_t* out, std::size_t count);                        \
  std::uint64_t count_intersection(Shape s, Word begin, Word end, Word center, unsigned r, unsigned t); \
  std::uint64_t count_rank_at_most(Shape s, Word begin, Word end, unsigned r);                       \
  void min_distance_batch(Shape s, const Word* xs, std::size_t nx, const Word* code, std::size_t nc, \
                          unsigned floor, std::uint8_t* out);                                        \
  std::uint64_t count_unmarked(const std::uint64_t* bits, Word center, const Word* offsets,          \
                               std::size_t count);

namespace scalar {
RANKCOVER_KERNEL_DECLS
}
namespace avx2 {
RANKCOVER_KERNEL_DECLS
}
// runtime-dispatched entry points
RANKCOVER_KERNEL_DECLS

#undef RANKCOVER_KERNEL_DECLS

}  // namespace rankcover::kernels
