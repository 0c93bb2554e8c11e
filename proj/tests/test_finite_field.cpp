#include <doctest.h>

#include "rankcover/finite_field.hpp"

using namespace rankcover;

TEST_CASE("default polynomials") {
  auto f5 = Field::create(2, 5);
  CHECK(f5->poly() == std::vector<unsigned>{1, 0, 1, 0, 0, 1});  // x^5+x^2+1
  CHECK(f5->poly_string() == "x^5+x^2+1");
  CHECK(f5->spec() == "gf(2^5;poly=0b100101)");

  auto f1 = Field::create(2, 1);
  CHECK(f1->order() == 2);
  CHECK(f1->mul(1, 1) == 1);

  for (unsigned m = 1; m <= 16; ++m) {
    auto f = Field::create(2, m);
    CHECK(f->m() == m);
  }
}

TEST_CASE("alpha^4 = alpha + 1 in GF(16) with x^4+x+1, order 15") {
  auto f = Field::create(2, 4, std::vector<unsigned>{1, 1, 0, 0, 1});
  const Word a = f->alpha();
  CHECK(f->pow(a, 4) == f->add(a, 1));
  unsigned order = 0;
  Word x = 1;
  do {
    x = f->mul(x, a);
    ++order;
  } while (x != 1);
  CHECK(order == 15);
}

TEST_CASE("non-primitive polynomial rejected") {
  // x^4+x^3+x^2+x+1 is irreducible but alpha has order 5
  CHECK_THROWS_AS(Field::create(2, 4, std::vector<unsigned>{1, 1, 1, 1, 1}), FieldError);
  // reducible
  CHECK_THROWS_AS(Field::create(2, 2, std::vector<unsigned>{1, 0, 1}), FieldError);
  CHECK_THROWS_AS(Field::create(4, 2), FieldError);
}

TEST_CASE("GF(4) arithmetic") {
  auto f = Field::create(2, 2);  // x^2+x+1
  const Word a = f->alpha();
  CHECK(f->mul(a, a) == f->add(a, 1));
  CHECK(f->inv(a) == f->add(a, 1));
  for (Word x = 0; x < 4; ++x) CHECK(f->add(x, x) == 0);
  CHECK_THROWS(f->inv(0));
}

TEST_CASE("field axioms exhaustively on small fields") {
  for (auto [q, m] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {2u, 4u}}) {
    auto f = Field::create(q, m);
    const Word N = f->order();
    for (Word a = 0; a < N; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      for (Word b = 0; b < N; ++b) {
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->sub(f->add(a, b), b) == a);
        if (b) CHECK(f->mul(f->div(a, b), b) == a);
        for (Word c = 0; c < N; c += 3) CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

namespace {
// carry-less product reduced by a binary polynomial given as a bit mask
Word clmul_mod(Word a, Word b, Word poly, unsigned m) {
  Word r = 0;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i) {
    if ((r >> i) & 1) r ^= poly << (i - m);
  }
  return r;
}
}  // namespace

TEST_CASE("multiplication matches a carry-less oracle, with and without log tables") {
  auto g = Field::create(2, 8);  // x^8+x^4+x^3+x^2+1
  for (Word a = 0; a < 256; ++a) {
    for (Word b = 0; b < 256; b += 3) CHECK(g->mul(a, b) == clmul_mod(a, b, 0x11D, 8));
  }
  std::vector<unsigned> p17(18, 0);
  p17[0] = p17[3] = p17[17] = 1;  // x^17+x^3+1
  auto f = Field::create(2, 17, p17);
  const Word mask = (Word(1) << 17) | 0x9;
  for (Word a = 1; a < f->order(); a += 4099) {
    for (Word b = 3; b < f->order(); b += 7919) {
      CHECK(f->mul(a, b) == clmul_mod(a, b, mask, 17));
      CHECK(f->mul(f->div(a, b), b) == a);
    }
  }
  CHECK(f->pow(f->alpha(), f->order() - 1) == 1);
}

TEST_CASE("expand") {
  auto f = Field::create(2, 3);
  CHECK(f->expand(0) == std::vector<unsigned>{0, 0, 0});
  CHECK(f->expand(1) == std::vector<unsigned>{1, 0, 0});
  const Word a2p1 = f->add(f->mul(f->alpha(), f->alpha()), 1);
  CHECK(f->expand(a2p1) == std::vector<unsigned>{1, 0, 1});
  for (Word x = 0; x < 8; ++x) CHECK(f->from_coeffs(f->expand(x)) == x);
}

TEST_CASE("field spec strings") {
  auto f = parse_field_spec("gf(2^5;poly=0b100101)");
  CHECK(*f == *Field::create(2, 5));
  CHECK(*parse_field_spec("gf(2^5)") == *f);
  CHECK(*parse_field_spec(f->spec()) == *f);
  auto g = parse_field_spec("gf(3^2;poly=[2,1,1])");
  CHECK(g->q() == 3);
  CHECK(*parse_field_spec(g->spec()) == *g);
  CHECK_THROWS_AS(parse_field_spec("gf(2^x)"), FieldError);
}

TEST_CASE("FieldElement rejects mixed fields") {
  FieldElement a(Field::create(2, 3), 3), b(Field::create(2, 4), 3);
  CHECK_THROWS_AS(a + b, FieldError);
  FieldElement c(a.field(), 5);
  CHECK((a * c / c) == a);
}
