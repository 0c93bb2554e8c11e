// Acceptance checks. Usage: acceptance [criterion 1-9 ...] [--slow]
// Prints one PASS/FAIL line per criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rankcover/bounds.hpp"
#include "rankcover/codes.hpp"
#include "rankcover/kernels.hpp"
#include "rankcover/qcombinatorics.hpp"
#include "rankcover/search.hpp"
#include "rankcover/table.hpp"

using namespace rankcover;

namespace {

bool g_slow = false;

struct Result {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    log << "    " << (cond ? "ok   " : "FAIL ") << what << '\n';
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. printed intersection values
void c1(Result& r) {
  struct Row {
    unsigned m, n, rho, d;
    long long printed;
  };
  const Row rows[] = {{4, 3, 2, 3, 560},    {5, 3, 2, 3, 1232},   {5, 4, 3, 4, 31040}, {6, 3, 2, 3, 2576},
                      {6, 4, 2, 3, 2912},   {6, 4, 3, 4, 756800}, {7, 3, 2, 3, 5264}};
  for (const Row& x : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    const BigCount v = intersection_bruteforce(2, x.m, x.n, x.rho, x.rho, x.d);
    std::ostringstream s;
    s << "I(2^" << x.m << "," << x.n << "," << x.rho << "," << x.d << ") = " << v << ", printed " << x.printed << " ("
      << seconds_since(t0) << " s)";
    r.expect(v == x.printed, s.str());
  }
}

// 2. closed forms against the enumeration oracle, q = 2, m, n <= 4
void c2(Result& r) {
  unsigned checked = 0, bad = 0;
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      const unsigned mn = std::min(m, n);
      for (unsigned rr = 1; rr <= mn; ++rr) {
        const BigCount a = intersection_ball_radius1(2, m, n, rr);
        const BigCount b = intersection_bruteforce(2, m, n, rr, 1, rr);
        ++checked;
        if (a != b) {
          ++bad;
          r.log << "    radius-1 form mismatch at m=" << m << " n=" << n << " r=" << rr << ": " << a << " vs " << b << '\n';
        }
        for (unsigned s = 0; s <= rr; ++s) {
          const BigCount c = intersection_complementary(2, m, n, rr, s);
          const BigCount d = intersection_bruteforce(2, m, n, s, rr - s, rr);
          ++checked;
          if (c != d) {
            ++bad;
            r.log << "    complementary form mismatch at m=" << m << " n=" << n << " r=" << rr << " s=" << s << '\n';
          }
        }
      }
    }
  }
  r.expect(bad == 0, std::to_string(checked) + " instances compared, " + std::to_string(bad) + " mismatches");
}

// 3. analytic covering-table entries
void c3(Result& r) {
  DiffOptions opt;
  opt.analytic_only = true;
  opt.max_m = 7;
  auto lines = diff_table1(load_golden(data_path("table1.csv")), opt);
  unsigned n = 0;
  for (const auto& d : lines) {
    if (d.letter.empty()) continue;  // trivial entries
    ++n;
    if (!d.ok) {
      std::ostringstream s;
      s << "(" << d.entry.m << "," << d.entry.n << "," << d.entry.rho << ") " << d.side << " " << d.letter
        << ": printed " << (d.side == "lower" ? d.entry.lower : d.entry.upper) << ", computed "
        << (d.ours ? d.ours->str() : "n/a");
      r.expect(false, s.str());
    }
  }
  for (auto [m, n2, rho, letter, v] : {std::tuple{4u, 4u, 1u, "f", 293}, {5u, 4u, 2u, "C", 256}, {5u, 3u, 1u, "e", 154},
                                       {5u, 5u, 2u, "E", 2881}}) {
    auto got = bound_by_letter(letter, 2, m, n2, rho);
    r.expect(got && *got == v, std::string("example ") + letter + " at (" + std::to_string(m) + "," +
                                   std::to_string(n2) + "," + std::to_string(rho) + ") = " + std::to_string(v));
  }
  r.log << "    " << n << " analytic entries compared\n";
}

// 4. K_R(2^2,2,1) = 3
void c4(Result& r) {
  r.expect(exhaustive_lower_bound(2, 2, 2, 1, 2), "no 2-word code of GF(4)^2 has covering radius 1");
  Code c = jsl_construct(2, 2, 2, 1);
  RadiusOptions ex;
  ex.force_explicit = true;
  r.expect(c.size() == 3 && covering_radius(c, ex) <= 1, "jsl_construct(2,2,2,1) gives a verified 3-word covering");
}

// 5. reference codes
void c5(Result& r) {
  RadiusOptions ex;
  ex.force_explicit = true;
  Code a = skip_vector_decode(SkipVector::parse("0^3"), Field::create(2, 2), 2);
  r.expect(a.size() == 3 && covering_radius(a, ex) <= 1, "\"0^3\" over GF(4)^2 has covering radius <= 1");
  Code b = skip_vector_decode(SkipVector::parse("135 689 34 420 477 522 759"), Field::create(2, 4), 3);
  r.expect(b.size() == 7 && covering_radius(b, ex) <= 2, "7-word GF(16)^3 code has covering radius <= 2");
  auto f = Field::create(2, 5);
  const Word al = f->alpha();
  Code g = Code::linear(f, 5, {{1, al, f->mul(al, al), 0, 0}});
  r.expect(g.size() == 32, "linear code (1,a,a^2,0,0) over GF(32) has 32 codewords");
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned rad = covering_radius(g);
  r.expect(rad == 3, "covering radius 3 by the coset method (" + std::to_string(seconds_since(t0)) + " s)");
  if (g_slow) {
    RadiusOptions big;
    big.force_explicit = true;
    big.enumeration.cap = std::uint64_t(1) << 26;
    const auto t1 = std::chrono::steady_clock::now();
    const unsigned rad2 = covering_radius(g, big);
    r.expect(rad2 == 3, "covering radius 3 by exhaustive scan of all 2^25 vectors (" +
                            std::to_string(seconds_since(t1)) + " s, kernel " +
                            kernels::isa_name(kernels::active_isa()) + ")");
  } else {
    r.log << "    (exhaustive 2^25-vector scan runs with --slow)\n";
  }
}

// 6. linear table
void c6(Result& r) {
  DimensionBounds b = linear_dimension_bounds(2, 4, 4, 2);
  r.expect(b.k_upper == 2, "(4,4,2): k <= 2 from the dimension bound");
  r.expect(b.k_lower <= 2, "(4,4,2): analytic lower " + std::to_string(b.k_lower));
  r.expect(linear_exhaustive(2, 4, 4, 2, 1), "(4,4,2): no 1-dimensional linear code has covering radius 2");
  r.expect(!linear_exhaustive(2, 4, 4, 2, 2), "(4,4,2): a 2-dimensional linear code with covering radius 2 exists");
  LinearTableOptions lo;
  lo.exhaustive = true;
  LinearCell c = linear_cell(2, 4, 4, 2, lo);
  r.expect(c.lower == 2 && c.upper == 2 && c.lower_letter == "h" && c.upper_letter == "A", "(4,4,2) cell reads h 2 A");
  unsigned n = 0, bad = 0;
  for (const auto& g : load_golden(data_path("table2.csv"))) {
    if (!g.lower_letter.empty() || !g.upper_letter.empty()) continue;
    ++n;
    auto k = linear_dimension_exact(2, g.m, g.n, g.rho, CodeClass::any);
    if (!k || BigCount(*k) != g.lower || g.lower != g.upper) {
      ++bad;
      r.log << "    unmarked entry (" << g.m << "," << g.n << "," << g.rho << ") printed " << g.lower << ", computed "
            << (k ? std::to_string(*k) : "none") << '\n';
    }
  }
  r.expect(bad == 0, std::to_string(n) + " unmarked exact entries match");
  r.expect(linear_dimension_exact(2, 6, 4, 2, CodeClass::any) == 2u, "(6,4,2) -> 2");
  r.expect(linear_dimension_exact(2, 8, 5, 3, CodeClass::any) == 2u, "(8,5,3) -> 2");
}

// 7. volume bracket, certified against the enclosure of K_q
void c7(Result& r) {
  const KqApprox k = kq_constant(2);
  unsigned n_checked = 0, bad = 0;
  for (unsigned m = 1; m <= 7; ++m) {
    for (unsigned n = 1; n <= 7; ++n) {
      for (unsigned rr = 0; rr <= std::min(m, n); ++rr) {
        const BigCount v = ball_volume(2, m, n, rr);
        const BigCount lo = ipow(2, rr * (m + n - rr));
        // V < lo / K_q holds if V * K_q(upper end of the enclosure) < lo
        const bool ok = lo <= v && Real(v) * k.upper() < Real(lo);
        ++n_checked;
        if (!ok) {
          ++bad;
          r.log << "    bracket fails at m=" << m << " n=" << n << " r=" << rr << '\n';
        }
      }
    }
  }
  r.expect(bad == 0, std::to_string(n_checked) + " (m,n,r) triples satisfy q^{r(m+n-r)} <= V_r < q^{r(m+n-r)}/K_q");
}

// 8. structural property suites
void c8(Result& r) {
  // ELS properties
  for (auto [m, n] : {std::pair{2u, 2u}, {3u, 3u}}) {
    auto f = Field::create(2, m);
    VectorSpace sp(f, n);
    bool l1 = true, l2 = true, l34 = true;
    for (Word i = 0; i < sp.size(); ++i) {
      RankVector x = sp.vector_at(i);
      const unsigned rk = rank_weight(x);
      unsigned hits = 0;
      for (const Els& e : els_enumerate(n, rk, 2)) hits += e.contains(x);
      l1 = l1 && hits == 1 && unique_els_of(x).contains(x) && unique_els_of(x).dim() == rk;
    }
    for (unsigned v = 1; v <= n; ++v) {
      for (const Els& V : els_enumerate(n, v, 2)) {
        std::vector<std::pair<Els, Els>> splits;
        for (unsigned a = 0; a <= v; ++a) {
          for (const Els& A : els_enumerate(n, a, 2)) {
            if (!A.subspace_of(V)) continue;
            auto comps = els_complements(A, V);
            l2 = l2 && BigCount(comps.size()) == ipow(2, a * (v - a));
            for (const Els& B : comps) splits.emplace_back(A, B);
          }
        }
        for (const RankVector& u : V.members(f)) {
          if (rank_weight(u) != v) continue;
          std::set<std::vector<Word>> ia, ib;
          for (const auto& [A, B] : splits) {
            auto [ua, ub] = project(u, A, B);
            l34 = l34 && rank_weight(ua) == A.dim() && rank_weight(ub) == B.dim();
            ia.insert(ua.coords());
            ib.insert(ub.coords());
          }
          l34 = l34 && ia.size() == splits.size() && ib.size() == splits.size();
        }
      }
    }
    const std::string where = " on GF(" + std::to_string(1u << m) + ")^" + std::to_string(n);
    r.expect(l1, "unique ELS of dimension rk x" + where);
    r.expect(l2, "q^{a(v-a)} ELS complements" + where);
    r.expect(l34, "projection ranks, injectivity" + where);
  }

  // intersection monotone in d
  bool mono = true;
  for (auto [m, n] : {std::pair{3u, 3u}, {4u, 4u}}) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        BigCount prev = -1;
        for (unsigned d = 0; d <= n; ++d) {
          const BigCount i = intersection_bruteforce(2, m, n, a, b, d);
          if (d > 0 && i > prev) mono = false;
          prev = i;
        }
      }
    }
  }
  r.expect(mono, "intersection volume non-increasing in d (GF(8)^3, GF(16)^4)");

  // three balls
  {
    auto f = Field::create(2, 2);
    const Word a = f->alpha(), a1 = f->add(a, 1);
    RankVector c1 = RankVector::zero(f, 3), c2(f, {1, a, 0}), c3(f, {a, 0, 1}), c3p(f, {a, a1, 0});
    auto triple = [&](const RankVector& z) {
      unsigned k = 0;
      for (const auto& v : ball_enumerate(c1, 1)) k += rank_distance(v, c2) <= 1 && rank_distance(v, z) <= 1;
      return k;
    };
    const bool dist = rank_distance(c1, c2) == 2 && rank_distance(c2, c3) == 2 && rank_distance(c1, c3) == 2 &&
                      rank_distance(c2, c3p) == 2 && rank_distance(c1, c3p) == 2;
    r.expect(dist && triple(c3) == 1 && triple(c3p) == 3, "three-ball intersections of sizes 1 and 3 in GF(4)^3");
  }

  // Gabidulin code as ELS complement
  {
    auto f = Field::create(2, 3);
    Code c = gabidulin_generator(f, 3, 1);
    VectorSpace sp(f, 3);
    bool ok = true;
    for (const Els& v : els_enumerate(3, 2, 2)) {
      std::set<Word> sums;
      unsigned common = 0;
      auto mem = v.members(f);
      for (const RankVector& x : c.codewords()) {
        common += v.contains(x);
        for (const RankVector& y : mem) sums.insert(sp.index_of(x + y));
      }
      ok = ok && common == 1 && c.size() * mem.size() == 512 && sums.size() == 512;
    }
    r.expect(ok, "(2,3,3) k=1 Gabidulin code is a complement of every 2-dim ELS");
  }

  // embedded MRD radius
  {
    RadiusOptions ex;
    ex.force_explicit = true;
    bool ok = true;
    for (auto [m, n, d, u] : {std::tuple{2u, 2u, 2u, 1u}, {3u, 3u, 2u, 1u}, {3u, 3u, 3u, 1u}, {3u, 3u, 3u, 2u}}) {
      ok = ok && covering_radius(field_embed(mrd_construct(2, m, n, d), u), ex) == d - 1;
    }
    r.expect(ok, "embedded MRD codes have covering radius exactly d-1");
  }

  // cartesian square of the (2,1) Gabidulin code over GF(4)
  {
    Code sq = cartesian_power(gabidulin_generator(Field::create(2, 2), 2, 1), 2);
    RadiusOptions ex;
    ex.force_explicit = true;
    r.expect(min_rank_distance(sq) == 2 && covering_radius(sq, ex) == 1, "cartesian Gabidulin square in GF(4)^4: radius d-1 = 1");
  }
}

// 9. asymptotic exponents
void c9(Result& r) {
  for (double rr : {0.2, 0.4}) {
    const double target = asymptotic_exponent(1.0, rr, AsymptoticKind::covering);
    double prev_gap = 1e9;
    bool shrinking = true;
    double lo20 = 0, up20 = 0;
    for (unsigned n : {10u, 15u, 20u}) {
      const unsigned rho = static_cast<unsigned>(std::lround(rr * n));
      const double lo = log_base_space(sphere_covering_lower(2, n, n, rho), 2, n, n);
      const double up = log_base_space(jsl_loose_upper(2, n, n, rho), 2, n, n);
      const double gap = std::max(std::fabs(lo - target), std::fabs(up - target));
      r.log << "    r=" << rr << " n=" << n << ": lower " << lo << ", upper " << up << ", target " << target
            << ", gap " << gap << '\n';
      if (gap >= prev_gap) shrinking = false;
      prev_gap = gap;
      lo20 = lo;
      up20 = up;
    }
    r.expect(std::fabs(lo20 - target) < 0.1 && std::fabs(up20 - target) < 0.1,
             "r=" + std::to_string(rr) + ": both exponents within 0.1 of (1-r)(1-br) at (20,20)");
    r.expect(shrinking, "r=" + std::to_string(rr) + ": gap shrinks from (10,10) to (20,20)");
  }
}

const std::vector<std::pair<const char*, std::function<void(Result&)>>> kCriteria = {
    {"reference intersection values", c1},
    {"closed-form intersections equal the oracle (m,n <= 4)", c2},
    {"analytic covering-table entries", c3},
    {"K_R(2^2,2,1) = 3 by exhaustive search and JSL", c4},
    {"reference codes meet their covering radii", c5},
    {"linear table (4,4,2) and unmarked exact entries", c6},
    {"volume bracket for m,n <= 7", c7},
    {"structural property suites", c8},
    {"asymptotic exponents", c9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      g_slow = true;
    } else {
      const int k = std::atoi(argv[i]);
      if (k < 1 || k > static_cast<int>(kCriteria.size())) {
        std::cerr << "usage: acceptance [1-9 ...] [--slow]\n";
        return 2;
      }
      which.push_back(k);
    }
  }
  if (which.empty()) {
    for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) which.push_back(k);
  }
  bool all = true;
  for (int k : which) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      kCriteria[k - 1].second(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << " " << (r.ok ? "PASS" : "FAIL") << ": " << kCriteria[k - 1].first << " ("
              << seconds_since(t0) << " s)\n"
              << r.log.str() << std::flush;
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
