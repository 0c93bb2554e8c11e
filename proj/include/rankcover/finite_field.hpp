#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankcover {

using Word = std::uint64_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// GF(q^m) over a prime q, in the polynomial basis {1, a, ..., a^{m-1}} where a is a root
/// of the primitive polynomial. Elements are plain integers in [0, q^m): base-q digits are the
/// basis coefficients, least significant digit = constant term.
class Field {
 public:
  /// poly holds m+1 coefficients, constant term first; the leading one must be 1.
  /// Omitted poly: stored defaults (q=2, m <= 16) or x - g for m = 1.
  static std::shared_ptr<const Field> create(unsigned q, unsigned m,
                                             std::optional<std::vector<unsigned>> poly = {});

  unsigned q() const { return q_; }
  unsigned m() const { return m_; }
  Word order() const { return order_; }  // q^m
  const std::vector<unsigned>& poly() const { return poly_; }
  bool binary() const { return q_ == 2; }

  Word add(Word a, Word b) const;
  Word sub(Word a, Word b) const;
  Word neg(Word a) const;
  Word mul(Word a, Word b) const;
  Word inv(Word a) const;
  Word div(Word a, Word b) const;
  Word pow(Word a, std::uint64_t e) const;
  /// multiply by an element of the prime field
  Word scale(Word a, unsigned c) const;

  Word one() const { return 1; }
  Word alpha() const { return alpha_; }

  std::vector<unsigned> expand(Word a) const;
  Word from_coeffs(const std::vector<unsigned>& c) const;
  unsigned digit(Word a, unsigned i) const;

  /// "gf(2^5;poly=0b100101)"; odd q uses a coefficient list "poly=[1,0,2]"
  std::string spec() const;
  std::string poly_string() const;  // "x^5+x^2+1"

  bool operator==(const Field& o) const { return q_ == o.q_ && poly_ == o.poly_; }

 private:
  Field(unsigned q, unsigned m, std::vector<unsigned> poly);
  Word mul_slow(Word a, Word b) const;
  void check(Word a) const;

  unsigned q_, m_;
  Word order_;
  std::vector<unsigned> poly_;
  Word alpha_ = 0;
  Word poly_low_ = 0;  // q=2: poly bits without the leading term
  std::vector<std::uint32_t> log_, exp_;
  std::vector<Word> qpow_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr default_field(unsigned q, unsigned m);
FieldPtr parse_field_spec(std::string_view spec);
std::optional<std::vector<unsigned>> default_poly(unsigned q, unsigned m);
bool is_prime(std::uint64_t x);
/// distinct prime factors
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

/// Value type bound to a field; arithmetic between elements of different fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Word v);
  const FieldPtr& field() const { return f_; }
  Word value() const { return v_; }
  std::vector<unsigned> coeffs() const { return f_->expand(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;

 private:
  const FieldPtr& same(const FieldElement& o) const;
  FieldPtr f_;
  Word v_;
};

}  // namespace rankcover
