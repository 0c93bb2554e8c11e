#include "rankcover/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

namespace rankcover {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  for (;;) {
    std::uint64_t x = rng() % n, y = x, c = rng() % (n - 1) + 1, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
      factor_into(n, out);
      return;
    }
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// primitive polynomials for q = 2, bit i = coefficient of x^i
constexpr std::uint32_t kBinaryDefaults[17] = {
    0,       0x3,     0x7,     0xB,     0x13,    0x25,    0x43,    0x89,   0x11D,
    0x211,   0x409,   0x805,   0x1053,  0x201B,  0x4443,  0x8003,  0x1100B};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  factor_into(x, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<unsigned>> default_poly(unsigned q, unsigned m) {
  if (m == 1) {
    // x - g for the smallest primitive root g
    if (q == 2) return std::vector<unsigned>{1, 1};
    auto fs = prime_factors(q - 1);
    for (unsigned g = 2; g < q; ++g) {
      bool ok = std::all_of(fs.begin(), fs.end(),
                            [&](std::uint64_t p) { return powmod(g, (q - 1) / p, q) != 1; });
      if (ok) return std::vector<unsigned>{q - g, 1};
    }
    return std::nullopt;
  }
  if (q == 2 && m <= 16) {
    std::vector<unsigned> c(m + 1);
    for (unsigned i = 0; i <= m; ++i) c[i] = (kBinaryDefaults[m] >> i) & 1;
    return c;
  }
  return std::nullopt;
}

Field::Field(unsigned q, unsigned m, std::vector<unsigned> poly) : q_(q), m_(m), poly_(std::move(poly)) {
  qpow_.assign(m + 1, 1);
  for (unsigned i = 1; i <= m; ++i) qpow_[i] = qpow_[i - 1] * q;
  order_ = qpow_[m];
  if (q == 2) {
    for (unsigned i = 0; i < m; ++i) poly_low_ |= Word(poly_[i]) << i;
  }
  alpha_ = (m == 1) ? Word((q - poly_[0]) % q) : Word(q);
}

std::shared_ptr<const Field> Field::create(unsigned q, unsigned m, std::optional<std::vector<unsigned>> poly) {
  if (!is_prime(q)) throw FieldError("q must be prime, got " + std::to_string(q));
  if (m < 1) throw FieldError("extension degree must be >= 1");
  long double size = 1;
  for (unsigned i = 0; i < m; ++i) size *= q;
  if (size >= 18446744073709551616.0L) throw FieldError("field too large (q^m must be < 2^64)");
  if (!poly) {
    poly = default_poly(q, m);
    if (!poly) {
      // smallest primitive polynomial, lower coefficients read as a base-q number (constant term least significant)
      if (size > 4294967296.0L) {
        throw FieldError("no default polynomial for GF(" + std::to_string(q) + "^" + std::to_string(m) + ")");
      }
      std::vector<unsigned> c(m + 1, 0);
      c[m] = 1;
      for (Word v = 1;; ++v) {
        Word x = v;
        for (unsigned i = 0; i < m; ++i, x /= q) c[i] = static_cast<unsigned>(x % q);
        if (x) throw FieldError("no primitive polynomial found");
        if (c[0] == 0) continue;
        try {
          return create(q, m, c);
        } catch (const FieldError&) {
        }
      }
    }
  }
  if (poly->size() != m + 1 || poly->back() != 1) throw FieldError("polynomial must be monic of degree m");
  for (unsigned c : *poly) {
    if (c >= q) throw FieldError("polynomial coefficient out of range");
  }
  std::shared_ptr<Field> f(new Field(q, m, *poly));
  const Word N = f->order_ - 1;
  if (f->alpha_ == 0) throw FieldError("polynomial is not primitive");
  if (f->pow(f->alpha_, N) != 1) throw FieldError("polynomial is not primitive");
  for (std::uint64_t p : prime_factors(N)) {
    if (f->pow(f->alpha_, N / p) == 1) throw FieldError("polynomial is not primitive");
  }
  if (f->order_ <= (1u << 16)) {
    f->exp_.resize(N);
    f->log_.assign(f->order_, 0);
    Word x = 1;
    for (Word i = 0; i < N; ++i) {
      f->exp_[i] = static_cast<std::uint32_t>(x);
      f->log_[x] = static_cast<std::uint32_t>(i);
      x = f->mul_slow(x, f->alpha_);
    }
  }
  return f;
}

void Field::check(Word a) const {
  if (a >= order_) throw FieldError("element out of range");
}

unsigned Field::digit(Word a, unsigned i) const {
  if (q_ == 2) return (a >> i) & 1;
  return static_cast<unsigned>((a / qpow_[i]) % q_);
}

Word Field::add(Word a, Word b) const {
  if (q_ == 2) return a ^ b;
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) r += Word((digit(a, i) + digit(b, i)) % q_) * qpow_[i];
  return r;
}

Word Field::neg(Word a) const {
  if (q_ == 2) return a;
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) r += Word((q_ - digit(a, i)) % q_) * qpow_[i];
  return r;
}

Word Field::sub(Word a, Word b) const { return add(a, neg(b)); }

Word Field::scale(Word a, unsigned c) const {
  c %= q_;
  if (q_ == 2) return c ? a : 0;
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) r += Word(digit(a, i) * c % q_) * qpow_[i];
  return r;
}

Word Field::mul_slow(Word a, Word b) const {
  if (q_ == 2) {
    const Word top = Word(1) << (m_ - 1);
    Word r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      bool carry = a & top;
      a = (a << 1) & (order_ - 1);
      if (carry) a ^= poly_low_;
    }
    return r;
  }
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    unsigned ai = digit(a, i);
    if (!ai) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(ai) * digit(b, j)) % q_;
  }
  for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (q_ - c) * poly_[i]) % q_;
    prod[k] = 0;
  }
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) r += prod[i] * qpow_[i];
  return r;
}

Word Field::mul(Word a, Word b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    const std::uint64_t N = order_ - 1;
    return exp_[s >= N ? s - N : s];
  }
  return mul_slow(a, b);
}

Word Field::pow(Word a, std::uint64_t e) const {
  if (!log_.empty() && a != 0) {
    const std::uint64_t N = order_ - 1;
    return exp_[static_cast<std::uint64_t>(static_cast<u128>(log_[a]) * (e % N) % N)];
  }
  Word r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Word Field::inv(Word a) const {
  check(a);
  if (a == 0) throw FieldError("inverse of zero");
  if (!log_.empty()) {
    const std::uint64_t N = order_ - 1;
    return exp_[(N - log_[a]) % N];
  }
  return pow(a, order_ - 2);
}

Word Field::div(Word a, Word b) const {
  if (b == 0) throw FieldError("division by zero");
  return mul(a, inv(b));
}

std::vector<unsigned> Field::expand(Word a) const {
  check(a);
  std::vector<unsigned> c(m_);
  for (unsigned i = 0; i < m_; ++i) c[i] = digit(a, i);
  return c;
}

Word Field::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() != m_) throw FieldError("coefficient vector must have length m");
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (c[i] >= q_) throw FieldError("coefficient out of range");
    r += Word(c[i]) * qpow_[i];
  }
  return r;
}

std::string Field::poly_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(m_); i >= 0; --i) {
    unsigned c = poly_[i];
    if (!c) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string Field::spec() const {
  std::ostringstream os;
  os << "gf(" << q_ << '^' << m_ << ";poly=";
  if (q_ == 2) {
    os << "0b";
    for (int i = static_cast<int>(m_); i >= 0; --i) os << poly_[i];
  } else {
    os << '[';
    for (unsigned i = 0; i <= m_; ++i) os << (i ? "," : "") << poly_[i];
    os << ']';
  }
  os << ')';
  return os.str();
}

FieldPtr default_field(unsigned q, unsigned m) { return Field::create(q, m); }

FieldPtr parse_field_spec(std::string_view spec) {
  static const std::regex re(R"(\s*gf\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*poly\s*=\s*(0b[01]+|0x[0-9a-fA-F]+|\[[0-9,\s]*\]))?\s*\)\s*)",
                             std::regex::icase);
  std::cmatch mt;
  if (!std::regex_match(spec.begin(), spec.end(), mt, re)) {
    throw FieldError("malformed field spec '" + std::string(spec) + "'");
  }
  const unsigned q = static_cast<unsigned>(std::stoul(mt[1].str()));
  const unsigned m = mt[2].matched ? static_cast<unsigned>(std::stoul(mt[2].str())) : 1;
  if (!mt[3].matched) return Field::create(q, m);
  std::string p = mt[3].str();
  std::vector<unsigned> coeffs;
  if (p[0] == '[') {
    std::string body = p.substr(1, p.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(static_cast<unsigned>(std::stoul(tok)));
  } else {
    if (q != 2) throw FieldError("bit-string polynomials require q = 2");
    std::uint64_t bits = std::stoull(p.substr(2), nullptr, (p[1] == 'b' || p[1] == 'B') ? 2 : 16);
    unsigned deg = 0;
    while ((bits >> (deg + 1)) != 0) ++deg;
    for (unsigned i = 0; i <= deg; ++i) coeffs.push_back((bits >> i) & 1);
  }
  return Field::create(q, m, coeffs);
}

FieldElement::FieldElement(FieldPtr f, Word v) : f_(std::move(f)), v_(v) {
  if (!f_) throw FieldError("null field");
  if (v_ >= f_->order()) throw FieldError("element out of range");
}

const FieldPtr& FieldElement::same(const FieldElement& o) const {
  if (f_ != o.f_ && !(*f_ == *o.f_)) throw FieldError("elements of different fields");
  return f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {same(o), f_->add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {same(o), f_->sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {same(o), f_->mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {same(o), f_->div(v_, o.v_)}; }
FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const { return v_ == o.v_ && *f_ == *o.f_; }

}  // namespace rankcover
