#include <doctest.h>

#include <algorithm>
#include <random>

#include "rankcover/kernels.hpp"

using namespace rankcover;
namespace k = rankcover::kernels;

namespace {
// straightforward Gaussian elimination on the m-bit chunks
unsigned reference_rank(Word x, unsigned m, unsigned n) {
  std::vector<Word> rows;
  for (unsigned j = 0; j < n; ++j) rows.push_back((x >> (m * j)) & ((Word(1) << m) - 1));
  unsigned r = 0;
  for (int bit = static_cast<int>(m) - 1; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](Word w) { return (w >> bit) & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r, it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && ((rows[i] >> bit) & 1)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

const k::Shape kShapes[] = {{2, 2}, {3, 3}, {4, 4}, {5, 3}, {6, 4}, {7, 3}, {5, 5}, {8, 7}, {16, 3}, {3, 16}};
}  // namespace

TEST_CASE("rank_one matches reference elimination") {
  std::mt19937_64 rng(7);
  for (auto s : kShapes) {
    const unsigned bits = s.m * s.n;
    for (int t = 0; t < 2000; ++t) {
      const Word x = bits >= 64 ? rng() : rng() & ((Word(1) << bits) - 1);
      CHECK(k::rank_one(x, s) == reference_rank(x, s.m, s.n));
    }
  }
}

TEST_CASE("scalar and AVX2 kernels agree") {
  if (!k::isa_supported(k::Isa::avx2)) {
    MESSAGE("AVX2 not supported by this CPU; skipped");
    return;
  }
  std::mt19937_64 rng(11);
  for (auto s : kShapes) {
    const unsigned bits = s.m * s.n;
    const Word space = bits >= 63 ? ~Word(0) : (Word(1) << bits);
    auto rnd = [&] { return bits >= 64 ? rng() : rng() & (space - 1); };

    std::vector<Word> in(1003);
    for (auto& x : in) x = rnd();
    std::vector<std::uint8_t> a(in.size()), b(in.size());
    k::scalar::rank_batch(s, in.data(), a.data(), in.size());
    k::avx2::rank_batch(s, in.data(), b.data(), in.size());
    CHECK(a == b);
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(a[i] == reference_rank(in[i], s.m, s.n));

    const Word begin = rnd() & ~Word(7);
    const std::size_t len = bits < 12 ? static_cast<std::size_t>(space) : 1501;
    const Word b0 = bits < 12 ? 0 : begin;
    std::vector<std::uint8_t> ra(len), rb(len);
    k::scalar::rank_range(s, b0, ra.data(), len);
    k::avx2::rank_range(s, b0, rb.data(), len);
    CHECK(ra == rb);

    const Word end = b0 + len;
    const Word center = rnd();
    for (unsigned r = 0; r <= std::min(s.m, s.n); ++r) {
      CHECK(k::scalar::count_rank_at_most(s, b0, end, r) == k::avx2::count_rank_at_most(s, b0, end, r));
      for (unsigned t = 0; t <= std::min(s.m, s.n); t += 2) {
        CHECK(k::scalar::count_intersection(s, b0, end, center, r, t) ==
              k::avx2::count_intersection(s, b0, end, center, r, t));
      }
    }

    std::vector<Word> code(37);
    for (auto& c : code) c = rnd();
    std::vector<std::uint8_t> ma(in.size()), mb(in.size());
    k::scalar::min_distance_batch(s, in.data(), in.size(), code.data(), code.size(), 0, ma.data());
    k::avx2::min_distance_batch(s, in.data(), in.size(), code.data(), code.size(), 0, mb.data());
    CHECK(ma == mb);
    for (std::size_t i = 0; i < in.size(); i += 17) {
      unsigned best = 255;
      for (Word c : code) best = std::min(best, reference_rank(in[i] ^ c, s.m, s.n));
      CHECK(ma[i] == best);
    }
    // with a floor the exact value is still reported whenever it exceeds the floor
    const unsigned floor = 1;
    k::scalar::min_distance_batch(s, in.data(), in.size(), code.data(), code.size(), floor, ma.data());
    k::avx2::min_distance_batch(s, in.data(), in.size(), code.data(), code.size(), floor, mb.data());
    for (std::size_t i = 0; i < in.size(); ++i) {
      unsigned best = 255;
      for (Word c : code) best = std::min(best, reference_rank(in[i] ^ c, s.m, s.n));
      if (best > floor) {
        CHECK(ma[i] == best);
        CHECK(mb[i] == best);
      } else {
        CHECK(ma[i] <= floor);
        CHECK(mb[i] <= floor);
      }
    }
  }
}

TEST_CASE("count_unmarked") {
  std::mt19937_64 rng(3);
  const unsigned bits = 14;
  std::vector<std::uint64_t> bitmap((Word(1) << bits) / 64);
  for (auto& w : bitmap) w = rng();
  std::vector<Word> offsets(333);
  for (auto& o : offsets) o = rng() & ((Word(1) << bits) - 1);
  for (int t = 0; t < 50; ++t) {
    const Word c = rng() & ((Word(1) << bits) - 1);
    std::uint64_t ref = 0;
    for (Word o : offsets) {
      const Word x = c ^ o;
      ref += !((bitmap[x >> 6] >> (x & 63)) & 1);
    }
    CHECK(k::scalar::count_unmarked(bitmap.data(), c, offsets.data(), offsets.size()) == ref);
    if (k::isa_supported(k::Isa::avx2)) {
      CHECK(k::avx2::count_unmarked(bitmap.data(), c, offsets.data(), offsets.size()) == ref);
    }
  }
}

TEST_CASE("dispatch override") {
  k::set_isa_override(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  k::set_isa_override(std::nullopt);
  CHECK(k::isa_supported(k::active_isa()));
}
