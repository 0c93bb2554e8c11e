#include "rankcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "rankcover/search.hpp"

namespace rankcover {

namespace {

void require_nontrivial(unsigned m, unsigned n, unsigned rho) {
  if (!(rho > 0 && rho < n && n <= m)) throw std::invalid_argument("need 0 < rho < n <= m");
}

Params norm(unsigned q, unsigned m, unsigned n, unsigned rho) { return normalize({q, m, n, rho}); }

template <class T>
T to_float(const BigCount& x) {
  return T(x);
}

template <class T>
T to_float(const Rational& x) {
  return T(boost::multiprecision::numerator(x)) / T(boost::multiprecision::denominator(x));
}

template <class T>
BigCount floor_big(const T& x) {
  return static_cast<BigCount>(floor(x));
}

// Evaluates eval(T) -> {x, abs_err} with growing precision until floor(x) is certified.
// Returns floor(x); sets hit when no precision separates x from an integer.
template <class Eval>
BigCount certified_floor(Eval&& eval, bool* hit = nullptr, unsigned* digits = nullptr) {
  auto attempt = [&](auto tag, unsigned d) -> std::optional<BigCount> {
    using T = decltype(tag);
    auto [x, err] = eval(tag);
    err += abs(x) * pow(T(10), -static_cast<int>(d) + 10);
    BigCount lo = floor_big(T(x - err)), hi = floor_big(T(x + err));
    if (digits) *digits = d;
    if (lo == hi) return lo;
    return std::nullopt;
  };
  if (hit) *hit = false;
  if (auto r = attempt(Float<50>{}, 50)) return *r;
  if (auto r = attempt(Float<120>{}, 120)) return *r;
  if (auto r = attempt(Float<400>{}, 400)) return *r;
  if (auto r = attempt(Float<1200>{}, 1200)) return *r;
  // x is (numerically) an integer; report the upper candidate so upper bounds stay valid
  if (hit) *hit = true;
  auto [x, err] = eval(Float<1200>{});
  (void)err;
  return floor_big(Float<1200>(x + Float<1200>("1e-1100")));
}

template <class T>
std::pair<T, T> harmonic(const BigCount& k) {
  if (k <= 0) return {T(0), T(0)};
  if (k <= 20000) {
    T h = 0;
    const long kk = static_cast<long>(k);
    for (long i = kk; i >= 1; --i) h += T(1) / i;
    return {h, T(0)};
  }
  const T x = to_float<T>(k);
  const T x2 = x * x, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4;
  T h = log(x) + boost::math::constants::euler<T>() + 1 / (2 * x) - 1 / (12 * x2) + 1 / (120 * x4) -
        1 / (252 * x6);
  return {h, 1 / (240 * x8)};
}

}  // namespace

Params normalize(Params p) {
  if (p.n > p.m) std::swap(p.n, p.m);
  return p;
}

IntersectionOracle::IntersectionOracle(EnumOptions opt, bool allow_enumeration)
    : opt_(opt), enumerate_(allow_enumeration) {}

std::optional<BigCount> IntersectionOracle::value(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned d) {
  if (d > 2 * rho) return BigCount(0);
  if (d == 0) return ball_volume(q, m, n, rho);
  if (d > std::min(m, n)) return std::nullopt;
  if (d == 2 * rho) return intersection_complementary(q, m, n, 2 * rho, rho);
  if (rho == 1 && d == 1) return intersection_ball_radius1(q, m, n, 1);
  const auto key = std::make_tuple(q, std::max(m, n), std::min(m, n), rho, d);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::optional<BigCount> v;
  if (enumerate_ && space_size(q, m, n) <= opt_.cap) {
    // enumerate in the orientation with the smaller field so q^m stays small
    v = intersection_bruteforce(q, std::max(m, n), std::min(m, n), rho, rho, d, opt_);
  }
  std::lock_guard<std::mutex> g(mu_);
  memo_[key] = v;
  return v;
}

IntersectionOracle& default_oracle() {
  static IntersectionOracle oracle;
  return oracle;
}

BigCount packing_max_cardinality(unsigned q, unsigned m, unsigned n, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be >= 1");
  if (d > std::min(m, n)) return 1;
  return std::min(ipow(q, m * (n - d + 1)), ipow(q, n * (m - d + 1)));
}

BigCount sphere_covering_lower(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  if (p.rho >= p.n) return 1;
  return ipow(q, p.m * p.n) / ball_volume(q, p.m, p.n, p.rho) + 1;
}

BigCount floor3_lower(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  return 3;
}

std::optional<Rational> cohen_rhs(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned l,
                                  IntersectionOracle& oracle) {
  Params p = norm(q, m, n, rho);
  m = p.m;
  n = p.n;
  rho = p.rho;
  require_nontrivial(m, n, rho);
  if (l >= n) return std::nullopt;
  const BigCount v = ball_volume(q, m, n, rho);
  auto il = oracle.value(q, m, n, rho, n - l);
  if (!il) return std::nullopt;
  BigCount num = ipow(q, m * n) - ipow(q, l * m) * *il;
  for (unsigned a = std::max(1u, n >= 2 * rho ? n - 2 * rho + 1 : 1u); a <= l; ++a) {
    auto x = oracle.value(q, m, n, rho, n - a + 1);
    if (!x) return std::nullopt;
    num += (ipow(q, a * m) - ipow(q, (a - 1) * m)) * *x;
  }
  return Rational(num, v - *il);
}

std::optional<GeneralizedCohen> cohen_generalized(unsigned q, unsigned m, unsigned n, unsigned rho,
                                                  IntersectionOracle& oracle) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  GeneralizedCohen res;
  bool any = false;
  for (unsigned l = 0; l < p.n; ++l) {
    // level l needs K >= q^{lm}, certified by the levels already admitted
    if (l > 0 && res.value < ipow(q, l * p.m)) break;
    auto rhs = cohen_rhs(q, p.m, p.n, p.rho, l, oracle);
    if (!rhs) break;
    res.rhs.push_back(*rhs);
    BigCount c = ceil_of(*rhs);
    if (!any || c > res.value) {
      res.value = c;
      res.l = l;
    }
    any = true;
    res.levels_admitted = l + 1;
  }
  if (!any) return std::nullopt;
  return res;
}

std::optional<BigCount> cohen_generalized_lower(unsigned q, unsigned m, unsigned n, unsigned rho,
                                                IntersectionOracle& oracle) {
  auto r = cohen_generalized(q, m, n, rho, oracle);
  if (!r) return std::nullopt;
  return r->value;
}

std::optional<BigCount> cohen_l0_lower(unsigned q, unsigned m, unsigned n, unsigned rho, IntersectionOracle& oracle) {
  auto r = cohen_rhs(q, m, n, rho, 0, oracle);
  if (!r) return std::nullopt;
  return ceil_of(*r);
}

std::optional<BigCount> cohen_closed_lower(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  if (2 * p.rho > p.n) return std::nullopt;
  const BigCount t = ipow(q, p.rho * p.rho) * gaussian(2 * p.rho, p.rho, q);
  const BigCount v = ball_volume(q, p.m, p.n, p.rho);
  return ceil_div(ipow(q, p.m * p.n) - ipow(q, p.m * (p.n - 2 * p.rho)) * t, v - t);
}

BigCount excess_epsilon(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  if (!(p.rho > 0 && p.rho < p.n)) throw std::invalid_argument("need 0 < rho < n");
  const BigCount a = (ipow(q, p.m) - ipow(q, p.rho)) * (gaussian(p.n, 1, q) - gaussian(p.rho, 1, q));
  const BigCount b = ipow(q, p.rho) * gaussian(p.rho + 1, 1, q);
  return ceil_div(a, b) * b - a;
}

std::optional<BigCount> excess_lower(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  const BigCount eps = excess_epsilon(q, p.m, p.n, p.rho);
  if (eps <= 0) return std::nullopt;
  const BigCount delta =
      ball_volume(q, p.m, p.n, 1) - ipow(q, p.rho - 1) * gaussian(p.rho, 1, q) - 1 + 2 * eps;
  const Rational denom = Rational(ball_volume(q, p.m, p.n, p.rho)) -
                         Rational(eps, delta) * Rational(num_rank_u(q, p.m, p.n, p.rho));
  return ceil_of(Rational(ipow(q, p.m * p.n)) / denom);
}

Quadratic excess_quadratic(unsigned q, unsigned m, unsigned n) {
  Params p = norm(q, m, n, n - 1);
  m = p.m;
  n = p.n;
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const BigCount Q = ipow(q, m * n);
  auto v = [&](unsigned r) { return ball_volume(q, m, n, r); };
  const BigCount al = ipow(q, n - 1) * gaussian(n, 1, q);
  const BigCount be = ipow(q, n - 1) * (ipow(q, m) + gaussian(n - 1, 1, q));
  const BigCount g = ipow(q, n - 2) * gaussian(n - 1, 1, q);
  Quadratic r;
  r.a = al * (v(n - 1) + v(n - 2));
  r.b = v(n - 1) * (g - v(1) + be + 1) + 2 * al * Q + be * v(n - 2);
  r.c = Q * (2 * be + 1 + g - v(1));
  auto f = [&](const BigCount& k) { return r.a * k * k - r.b * k + r.c; };
  const BigCount k0 = std::max(sphere_covering_lower(q, m, n, n - 1), BigCount(3));
  BigCount k = k0;
  if (f(k) < 0) {
    // k0 lies strictly between the roots: answer is the ceiling of the larger root
    BigCount disc = r.b * r.b - 4 * r.a * r.c;
    k = (r.b + boost::multiprecision::sqrt(disc)) / (2 * r.a);
    while (k - 1 >= k0 && f(k - 1) >= 0) --k;
    while (f(k) < 0) ++k;
  }
  r.value = k;
  return r;
}

BigCount excess_quadratic_lower(unsigned q, unsigned m, unsigned n) { return excess_quadratic(q, m, n).value; }

BigCount trivial_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  if (p.rho >= p.n) return 1;
  return ipow(q, p.m * (p.n - p.rho));
}

BigCount superadditive_upper(unsigned q, unsigned m, unsigned n, unsigned rho,
                             const std::optional<Partition>& partition, Partition* best_out) {
  Params p = norm(q, m, n, rho);
  m = p.m;
  n = p.n;
  rho = p.rho;
  auto exponent = [&](const Partition& part) {
    long e = static_cast<long>(m) * (static_cast<long>(n) - rho);
    for (auto [ni, ri] : part) e -= static_cast<long>(ri) * (ni - ri);
    return e;
  };
  if (partition) {
    unsigned sn = 0, sr = 0;
    for (auto [ni, ri] : *partition) {
      if (ni == 0 || ri > ni || ni + ri > m) throw std::invalid_argument("infeasible partition block");
      sn += ni;
      sr += ri;
    }
    if (sn != n || sr != rho) throw std::invalid_argument("partition does not sum to (n, rho)");
    if (best_out) *best_out = *partition;
    return ipow(q, static_cast<unsigned>(exponent(*partition)));
  }
  if (n > 16) throw std::invalid_argument("partition search limited to n <= 16");
  long best = -1;
  Partition cur, best_part;
  std::function<void(unsigned, unsigned, std::pair<unsigned, unsigned>)> rec =
      [&](unsigned left_n, unsigned left_r, std::pair<unsigned, unsigned> lo) {
        if (left_n == 0) {
          if (left_r != 0) return;
          long e = exponent(cur);
          if (best < 0 || e < best) {
            best = e;
            best_part = cur;
          }
          return;
        }
        for (unsigned ni = 1; ni <= left_n; ++ni) {
          for (unsigned ri = 0; ri <= std::min(ni, left_r); ++ri) {
            if (ni + ri > m || std::make_pair(ni, ri) < lo) continue;
            cur.emplace_back(ni, ri);
            rec(left_n - ni, left_r - ri, {ni, ri});
            cur.pop_back();
          }
        }
      };
  rec(n, rho, {0, 0});
  if (best < 0) throw std::invalid_argument("no feasible partition");
  if (best_out) *best_out = best_part;
  return ipow(q, static_cast<unsigned>(best));
}

BigCount mrd_embedding_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  return ipow(q, std::max(p.m - p.rho, p.n) * (p.n - p.rho));
}

ProbabilisticBound probabilistic_bound(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  const BigCount Q = ipow(q, p.m * p.n), v = ball_volume(q, p.m, p.n, p.rho);
  ProbabilisticBound res;
  // K = floor(1/(1 - log_Q(Q - v))) + 1 = floor(-ln Q / ln(1 - v/Q)) + 1
  res.value = certified_floor(
                  [&](auto tag) {
                    using T = decltype(tag);
                    T lnq = T(p.m * p.n) * log(T(q));
                    T x = -lnq / boost::math::log1p(-(T(v) / T(Q)));
                    return std::pair<T, T>{x, T(0)};
                  },
                  &res.integer_hit, &res.digits) +
              1;
  return res;
}

BigCount probabilistic_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  return probabilistic_bound(q, m, n, rho).value;
}

BigCount floor_harmonic_expr(const BigCount& k, const Rational& scale, const Rational& offset) {
  return certified_floor([&](auto tag) {
    using T = decltype(tag);
    auto [h, herr] = harmonic<T>(k);
    T s = to_float<T>(scale);
    return std::pair<T, T>{s * h + to_float<T>(offset), abs(s) * herr};
  });
}

BigCount jsl_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  const BigCount Q = ipow(q, p.m * p.n), v = ball_volume(q, p.m, p.n, p.rho);
  return floor_harmonic_expr(v, Rational(Q, v), Rational(0));
}

JslTerms jsl_terms(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  JslTerms t;
  t.a = std::min(p.n, 2 * p.rho);
  const BigCount Q = ipow(q, p.m * p.n), v = ball_volume(q, p.m, p.n, p.rho);
  t.k = Q - v * ipow(q, p.m * (p.n - t.a));
  t.j = ceil_div(v * ipow(q, p.m * t.a) - v * v, ipow(q, p.m * t.a));
  BigCount sum = 0;
  for (unsigned i = t.a - p.rho; i <= p.rho; ++i) sum += ipow(q, i * (t.a - i)) * gaussian(t.a, i, q);
  t.s = v - sum;
  t.t = std::min(t.s, t.j);
  return t;
}

BigCount jsl_refined_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  const JslTerms t = jsl_terms(q, p.m, p.n, p.rho);
  const BigCount Q = ipow(q, p.m * p.n), v = ball_volume(q, p.m, p.n, p.rho);
  if (t.t < 1) throw std::logic_error("harmonic index must be positive");
  const Rational offset = Rational(t.k) * (Rational(1, t.t) - Rational(1, v));
  return floor_harmonic_expr(t.t, Rational(Q, v), offset);
}

BigCount jsl_loose_upper(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  const BigCount Q = ipow(q, p.m * p.n), v = ball_volume(q, p.m, p.n, p.rho);
  return certified_floor([&](auto tag) {
    using T = decltype(tag);
    T vv(v);
    T x = T(Q) / vv * (log(vv) + boost::math::constants::euler<T>() + 1 / (2 * vv + T(1) / 3));
    return std::pair<T, T>{x, T(0)};
  });
}

DimensionBounds linear_dimension_bounds(unsigned q, unsigned m, unsigned n, unsigned rho) {
  Params p = norm(q, m, n, rho);
  require_nontrivial(p.m, p.n, p.rho);
  const KqApprox k = kq_constant(q);
  const Real logk_lo = log(k.lower()) / log(Real(q));
  // smallest end of the certified interval for the left-hand side
  const Real lhs = Real(p.n - p.rho) - (Real(p.rho * (p.n - p.rho)) - logk_lo) / p.m;
  DimensionBounds b;
  b.k_upper = p.n - p.rho;
  long lo = static_cast<long>(floor(lhs)) + 1;
  b.k_lower = static_cast<unsigned>(std::clamp<long>(lo, 0, b.k_upper));
  return b;
}

std::optional<unsigned> linear_dimension_exact(unsigned q, unsigned m, unsigned n, unsigned rho, CodeClass cls) {
  if (cls == CodeClass::gabidulin_cartesian_square_field) {
    const unsigned d = rho;
    if (m == 0 || n % m != 0 || d < 1 || d > m) return std::nullopt;
    return d - 1;
  }
  Params p = norm(q, m, n, rho);
  if (p.rho > p.n) return 0;
  if (cls == CodeClass::gabidulin || cls == CodeClass::els) return p.n - p.rho;
  if (p.rho == 0 || p.rho == 1 || p.rho + 1 == p.n || p.rho == p.n) return p.n - p.rho;
  const KqApprox k = kq_constant(q);
  const Real logk_lo = log(k.lower()) / log(Real(q));
  if (Real(p.rho * (p.n - p.rho)) <= Real(p.m) + logk_lo) return p.n - p.rho;
  return std::nullopt;
}

double asymptotic_exponent(double b, double x, AsymptoticKind kind) {
  if (!(b > 0)) throw std::domain_error("b must be positive");
  const double lim = std::min(1.0, 1.0 / b);
  if (!(x >= 0 && x <= lim)) throw std::domain_error("argument outside [0, min(1, 1/b)]");
  if (kind == AsymptoticKind::volume) return x * (1 + b - b * x);
  return (1 - x) * (1 - b * x);
}

double log_base_space(const BigCount& x, unsigned q, unsigned m, unsigned n) {
  if (x <= 0) throw std::domain_error("log of non-positive value");
  Real lx = log(Real(x));
  return static_cast<double>(lx / (Real(m * n) * log(Real(q))));
}

const BoundEntry* BoundReport::find(const std::string& letter) const {
  for (const auto& e : entries) {
    if (e.letter == letter) return &e;
  }
  return nullptr;
}

BoundReport best_bounds(unsigned q, unsigned m, unsigned n, unsigned rho, const BoundOptions& opt) {
  BoundReport rep;
  rep.params = {q, m, n, rho};
  rep.normalized = normalize(rep.params);
  const Params p = rep.normalized;
  if (p.rho >= p.n || p.rho == 0) {
    rep.trivial = true;
    rep.best_lower = rep.best_upper = p.rho == 0 ? ipow(q, p.m * p.n) : BigCount(1);
    return rep;
  }
  IntersectionOracle local(opt.enumeration, opt.bruteforce_intersections);
  IntersectionOracle& oracle = opt.oracle ? *opt.oracle : (opt.bruteforce_intersections ? default_oracle() : local);

  auto add = [&](std::string name, std::string letter, BoundKind kind, std::optional<BigCount> v,
                 std::string note = {}) {
    BoundEntry e;
    e.name = std::move(name);
    e.letter = std::move(letter);
    e.kind = kind;
    e.applicable = v.has_value();
    if (v) e.value = *v;
    e.note = std::move(note);
    rep.entries.push_back(std::move(e));
  };
  const unsigned Q_ = q, M = p.m, N = p.n, R = p.rho;

  add("sphere_covering_lower", "a", BoundKind::lower, sphere_covering_lower(Q_, M, N, R));
  add("floor3_lower", "b", BoundKind::lower, floor3_lower(Q_, M, N, R));
  {
    auto g = cohen_generalized(Q_, M, N, R, oracle);
    std::string note;
    if (g) note = "l=" + std::to_string(g->l) + ", levels admitted " + std::to_string(g->levels_admitted);
    add("cohen_generalized_lower", "c", BoundKind::lower, g ? std::optional<BigCount>(g->value) : std::nullopt,
        g ? note : "intersection values unavailable");
  }
  add("cohen_l0_lower", "d", BoundKind::lower, cohen_l0_lower(Q_, M, N, R, oracle));
  add("cohen_closed_lower", "e", BoundKind::lower, cohen_closed_lower(Q_, M, N, R),
      2 * R > N ? "needs rho <= n/2" : "");
  {
    auto f = excess_lower(Q_, M, N, R);
    add("excess_lower", "f", BoundKind::lower, f, "epsilon=" + excess_epsilon(Q_, M, N, R).str());
  }
  if (R + 1 == N) add("excess_quadratic_lower", "f2", BoundKind::lower, excess_quadratic_lower(Q_, M, N));

  add("trivial_upper", "A", BoundKind::upper, trivial_upper(Q_, M, N, R),
      "also the Hamming comparison q^{m(n-rho)}");
  add("mrd_embedding_upper", "B", BoundKind::upper, mrd_embedding_upper(Q_, M, N, R));
  {
    Partition part;
    BigCount c = superadditive_upper(Q_, M, N, R, std::nullopt, &part);
    std::string note = "partition";
    for (auto [ni, ri] : part) note += " (" + std::to_string(ni) + "," + std::to_string(ri) + ")";
    add("superadditive_upper", "C", BoundKind::upper, c, note);
  }
  {
    auto pb = probabilistic_bound(Q_, M, N, R);
    add("probabilistic_upper", "D", BoundKind::upper, pb.value, pb.integer_hit ? "exact-integer hit" : "");
  }
  add("jsl_upper", "E", BoundKind::upper, jsl_upper(Q_, M, N, R));
  add("jsl_refined_upper", "E*", BoundKind::upper, jsl_refined_upper(Q_, M, N, R));
  add("jsl_loose_upper", "E~", BoundKind::upper, jsl_loose_upper(Q_, M, N, R));

  if (opt.constructive && space_size(Q_, M, N) <= opt.constructive_cap) {
    Code c = jsl_construct(Q_, M, N, R);
    add("jsl_construct", "F", BoundKind::upper, BigCount(c.size()), "covering radius verified");
  }

  // combine
  bool have_lo = false, have_hi = false;
  for (const auto& e : rep.entries) {
    if (!e.applicable) continue;
    if (e.kind == BoundKind::lower && (!have_lo || e.value > rep.best_lower)) {
      rep.best_lower = e.value;
      have_lo = true;
    }
    if (e.kind == BoundKind::upper && (!have_hi || e.value < rep.best_upper)) {
      rep.best_upper = e.value;
      have_hi = true;
    }
  }
  if (opt.constructive && space_size(Q_, M, N) <= opt.constructive_cap) {
    // lift the lower bound by exhaustive refutation while affordable
    SearchBudget budget;
    budget.max_nodes = 20'000'000;
    for (BigCount k = rep.best_lower; k < rep.best_upper; ++k) {
      try {
        if (!exhaustive_lower_bound(Q_, M, N, R, static_cast<unsigned>(k), budget)) break;
      } catch (const Intractable&) {
        break;
      }
      rep.best_lower = k + 1;
      BoundEntry e;
      e.name = "exhaustive_lower_bound";
      e.letter = "g";
      e.kind = BoundKind::lower;
      e.applicable = true;
      e.value = k + 1;
      e.note = "no code of size " + k.str() + " exists";
      auto it = std::find_if(rep.entries.begin(), rep.entries.end(), [](const BoundEntry& x) { return x.letter == "g"; });
      if (it != rep.entries.end()) *it = e; else rep.entries.push_back(e);
    }
  }
  for (const auto& e : rep.entries) {
    if (!e.applicable) continue;
    if (e.kind == BoundKind::lower && e.value == rep.best_lower) rep.lower_letters.push_back(e.letter);
    if (e.kind == BoundKind::upper && e.value == rep.best_upper) rep.upper_letters.push_back(e.letter);
  }
  return rep;
}

}  // namespace rankcover
