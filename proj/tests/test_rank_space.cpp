#include <doctest.h>

#include <set>

#include "rankcover/qcombinatorics.hpp"
#include "rankcover/rank_space.hpp"

using namespace rankcover;

namespace {
std::vector<RankVector> all_vectors(const FieldPtr& f, unsigned n) {
  VectorSpace sp(f, n);
  std::vector<RankVector> out;
  for (Word i = 0; i < sp.size(); ++i) out.push_back(sp.vector_at(i));
  return out;
}
}  // namespace

TEST_CASE("rank weight examples") {
  auto f = Field::create(2, 2);
  const Word a = f->alpha();
  CHECK(rank_weight(RankVector::zero(f, 3)) == 0);
  CHECK(rank_weight(RankVector(f, {1, a})) == 2);
  CHECK(rank_weight(RankVector(f, {1, 1, a})) == 2);
  CHECK(rank_distance(RankVector(f, {1, a}), RankVector(f, {0, 0})) == 2);
}

TEST_CASE("rank metric axioms over GF(4)^2") {
  auto f = Field::create(2, 2);
  auto all = all_vectors(f, 2);
  for (const auto& x : all) {
    CHECK(rank_distance(x, x) == 0);
    for (const auto& y : all) {
      const unsigned d = rank_distance(x, y);
      CHECK(d == rank_distance(y, x));
      CHECK((d == 0) == (x == y));
      for (const auto& z : all) CHECK(d <= rank_distance(x, z) + rank_distance(z, y));
    }
  }
}

TEST_CASE("rank weight equals GF(q) rank of the expansion, q = 3") {
  auto f = Field::create(3, 2);
  for (const auto& x : all_vectors(f, 3)) CHECK(rank_weight(x) == gf_rank(x.expansion(), 3));
}

TEST_CASE("support space dimension equals rank") {
  auto f = Field::create(2, 3);
  for (const auto& x : all_vectors(f, 3)) CHECK(support_space(x).dim() == rank_weight(x));
}

TEST_CASE("packed rank agrees with generic rank") {
  for (auto [m, n] : {std::pair{3u, 3u}, {4u, 2u}, {2u, 4u}}) {
    auto f = Field::create(2, m);
    VectorSpace sp(f, n);
    for (Word i = 0; i < sp.size(); ++i) {
      CHECK(sp.rank(i) == rank_weight(sp.vector_at(i)));
      CHECK(sp.index_of(sp.vector_at(i)) == i);
    }
  }
  auto g = Field::create(3, 2);
  VectorSpace sg(g, 2);
  for (Word i = 0; i < sg.size(); ++i) CHECK(sg.rank(i) == rank_weight(sg.vector_at(i)));
  for (Word i = 0; i < sg.size(); i += 5) {
    for (Word j = 0; j < sg.size(); j += 3) CHECK(sg.vector_at(sg.sub(i, j)) == sg.vector_at(i) - sg.vector_at(j));
  }
}

TEST_CASE("unique_els_of examples") {
  auto f = Field::create(2, 2);
  Els e = unique_els_of(RankVector(f, {1, 1}));
  CHECK(e.dim() == 1);
  CHECK(e.basis() == GfMatrix{{1, 1}});
  CHECK(unique_els_of(RankVector::zero(f, 2)).dim() == 0);
}

TEST_CASE("els_enumerate counts are Gaussian binomials") {
  CHECK(els_enumerate(2, 1, 2).size() == 3);
  CHECK(els_enumerate(4, 0, 2).size() == 1);
  CHECK(els_enumerate(4, 2, 2).size() == 35);
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned v = 0; v <= n; ++v) {
      auto list = els_enumerate(n, v, 2);
      CHECK(BigCount(list.size()) == gaussian(n, v, 2));
      std::set<Els> uniq(list.begin(), list.end());
      CHECK(uniq.size() == list.size());
    }
  }
  CHECK(BigCount(els_enumerate(3, 1, 3).size()) == gaussian(3, 1, 3));
}

TEST_CASE("ELS members are the GF(q^m)-span") {
  auto f = Field::create(2, 2);
  auto full = Els::full(2, 2);
  CHECK(full.members(f).size() == 16);
  Els line(2, 2, {{1, 1}});
  auto mem = line.members(f);
  CHECK(mem.size() == 4);
  for (const auto& x : mem) CHECK(line.contains(x));
  CHECK_FALSE(line.contains(RankVector(f, {1, f->alpha()})));
}

// each vector lies in a unique ELS of dimension rk(x)
static void check_lemma1(unsigned m, unsigned n) {
  auto f = Field::create(2, m);
  for (const auto& x : all_vectors(f, n)) {
    const unsigned r = rank_weight(x);
    Els u = unique_els_of(x);
    CHECK(u.dim() == r);
    CHECK(u.contains(x));
    unsigned hits = 0;
    for (const Els& e : els_enumerate(n, r, 2)) hits += e.contains(x);
    CHECK(hits == 1);
  }
}
TEST_CASE("unique ELS of dimension rk(x), exhaustive on GF(4)^2 and GF(8)^3") {
  check_lemma1(2, 2);
  check_lemma1(3, 3);
}

// q^{a(v-a)} complements of A inside V
static void check_lemma2(unsigned n) {
  for (unsigned v = 0; v <= n; ++v) {
    for (const Els& V : els_enumerate(n, v, 2)) {
      BigCount pairs = 0;
      for (unsigned a = 0; a <= v; ++a) {
        BigCount pairs_a = 0;
        for (const Els& A : els_enumerate(n, a, 2)) {
          if (!A.subspace_of(V)) continue;
          auto comps = els_complements(A, V);
          CHECK(BigCount(comps.size()) == ipow(2, a * (v - a)));
          for (const Els& B : comps) {
            CHECK(B.dim() == v - a);
            CHECK(A.sum(B) == V);
          }
          pairs_a += comps.size();
        }
        CHECK(pairs_a == ipow(2, a * (v - a)) * gaussian(v, a, 2));
        pairs += pairs_a;
      }
      (void)pairs;
    }
  }
}
TEST_CASE("ELS complement counts") {
  auto full = Els::full(2, 2);
  CHECK(els_complements(full, full).size() == 1);
  CHECK(els_complements(full, full).front().dim() == 0);
  Els a(2, 2, {{1, 0}});
  CHECK(els_complements(a, full).size() == 2);
  check_lemma2(2);
  check_lemma2(3);
}

TEST_CASE("project") {
  auto f = Field::create(2, 2);
  Els a(2, 2, {{1, 0}}), b(2, 2, {{1, 1}});
  RankVector x(f, {f->alpha(), 0});
  auto [xa, xb] = project(x, a, b);
  CHECK(xa == x);
  CHECK(xb.is_zero());
  for (const auto& y : all_vectors(f, 2)) {
    auto [ya, yb] = project(y, a, b);
    CHECK(ya + yb == y);
    CHECK(a.contains(ya));
    CHECK(b.contains(yb));
  }
}

// for full-rank u in V, every split V = A + B gives rk(u_A) = dim A, and the
// maps (A,B) -> u_A and (A,B) -> u_B are injective.
static void check_lemmas34(unsigned m, unsigned n) {
  auto f = Field::create(2, m);
  for (unsigned v = 1; v <= n; ++v) {
    for (const Els& V : els_enumerate(n, v, 2)) {
      std::vector<std::pair<Els, Els>> splits;
      for (unsigned a = 0; a <= v; ++a) {
        for (const Els& A : els_enumerate(n, a, 2)) {
          if (!A.subspace_of(V)) continue;
          for (const Els& B : els_complements(A, V)) splits.emplace_back(A, B);
        }
      }
      for (const RankVector& u : V.members(f)) {
        if (rank_weight(u) != v) continue;
        std::set<std::vector<Word>> images_a, images_b;
        for (const auto& [A, B] : splits) {
          auto [ua, ub] = project(u, A, B);
          CHECK(rank_weight(ua) == A.dim());
          CHECK(rank_weight(ub) == B.dim());
          images_a.insert(ua.coords());
          images_b.insert(ub.coords());
        }
        CHECK(images_a.size() == splits.size());
        CHECK(images_b.size() == splits.size());
      }
    }
  }
}
TEST_CASE("projection ranks and injectivity, exhaustive on GF(4)^2 and GF(8)^3") {
  check_lemmas34(2, 2);
  check_lemmas34(3, 3);
}

TEST_CASE("gf_inverse") {
  GfMatrix a{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  GfMatrix inv = gf_inverse(a, 2);
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      unsigned s = 0;
      for (unsigned k = 0; k < 3; ++k) s ^= a[i][k] & inv[k][j];
      CHECK(s == (i == j));
    }
  }
  CHECK_THROWS(gf_inverse(GfMatrix{{1, 1}, {1, 1}}, 2));
}
