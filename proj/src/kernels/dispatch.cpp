#include <atomic>

#include "rankcover/kernels.hpp"

namespace rankcover::kernels {

namespace {
std::atomic<int> g_override{-1};
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(RANKCOVER_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  static const Isa best = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return best;
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && !isa_supported(*isa)) throw FieldError(std::string("ISA not supported: ") + isa_name(*isa));
  g_override.store(isa ? static_cast<int>(*isa) : -1);
}

#if !defined(RANKCOVER_HAVE_AVX2)
namespace avx2 {
void rank_batch(Shape s, const Word* in, std::uint8_t* out, std::size_t count) {
  scalar::rank_batch(s, in, out, count);
}
void rank_range(Shape s, Word begin, std::uint8_t* out, std::size_t count) {
  scalar::rank_range(s, begin, out, count);
}
std::uint64_t count_intersection(Shape s, Word begin, Word end, Word center, unsigned r, unsigned t) {
  return scalar::count_intersection(s, begin, end, center, r, t);
}
std::uint64_t count_rank_at_most(Shape s, Word begin, Word end, unsigned r) {
  return scalar::count_rank_at_most(s, begin, end, r);
}
void min_distance_batch(Shape s, const Word* xs, std::size_t nx, const Word* code, std::size_t nc,
                        unsigned floor, std::uint8_t* out) {
  scalar::min_distance_batch(s, xs, nx, code, nc, floor, out);
}
std::uint64_t count_unmarked(const std::uint64_t* bits, Word center, const Word* offsets, std::size_t count) {
  return scalar::count_unmarked(bits, center, offsets, count);
}
}  // namespace avx2
#endif

#define DISPATCH(call) (active_isa() == Isa::avx2 ? avx2::call : scalar::call)

void rank_batch(Shape s, const Word* in, std::uint8_t* out, std::size_t count) {
  DISPATCH(rank_batch(s, in, out, count));
}
void rank_range(Shape s, Word begin, std::uint8_t* out, std::size_t count) {
  DISPATCH(rank_range(s, begin, out, count));
}
std::uint64_t count_intersection(Shape s, Word begin, Word end, Word center, unsigned r, unsigned t) {
  return DISPATCH(count_intersection(s, begin, end, center, r, t));
}
std::uint64_t count_rank_at_most(Shape s, Word begin, Word end, unsigned r) {
  return DISPATCH(count_rank_at_most(s, begin, end, r));
}
void min_distance_batch(Shape s, const Word* xs, std::size_t nx, const Word* code, std::size_t nc,
                        unsigned floor, std::uint8_t* out) {
  DISPATCH(min_distance_batch(s, xs, nx, code, nc, floor, out));
}
std::uint64_t count_unmarked(const std::uint64_t* bits, Word center, const Word* offsets, std::size_t count) {
  return DISPATCH(count_unmarked(bits, center, offsets, count));
}

}  // namespace rankcover::kernels
