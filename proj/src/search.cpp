#include "rankcover/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>
#include <set>

#include "rankcover/bounds.hpp"
#include "rankcover/kernels.hpp"

namespace rankcover {

CoverState::CoverState(Word size) : size_(size), uncovered_(size), bits_((size + 63) / 64, 0) {}

bool CoverState::mark(Word x) {
  std::uint64_t& w = bits_[x >> 6];
  const std::uint64_t b = std::uint64_t(1) << (x & 63);
  if (w & b) return false;
  w |= b;
  --uncovered_;
  return true;
}

void CoverState::unmark(Word x) {
  std::uint64_t& w = bits_[x >> 6];
  const std::uint64_t b = std::uint64_t(1) << (x & 63);
  if (w & b) {
    w &= ~b;
    ++uncovered_;
  }
}

Word CoverState::popcount() const {
  Word c = 0;
  for (auto w : bits_) c += static_cast<Word>(__builtin_popcountll(w));
  return c;
}

namespace {

struct Ambient {
  FieldPtr f;
  VectorSpace sp;
  std::vector<Word> ball;  // B_rho(0)

  Ambient(unsigned q, unsigned m, unsigned n, unsigned rho, const EnumOptions& opt)
      : f(default_field(q, m)), sp(f, n) {
    check_cap(space_size(q, m, n), opt);
    ball = ball_indices(sp, 0, rho, opt);
  }
  Word shift(Word c, Word e) const { return sp.add(c, e); }

  std::uint64_t count_uncovered(const CoverState& cs, Word c) const {
    if (sp.packed()) return kernels::count_unmarked(cs.data(), c, ball.data(), ball.size());
    std::uint64_t k = 0;
    for (Word e : ball) k += !cs.covered(shift(c, e));
    return k;
  }
};

void verify_or_throw(const Code& c, unsigned rho, const char* who) {
  RadiusOptions ro;
  ro.force_explicit = true;
  ro.enumeration.cap = ~std::uint64_t(0) >> 1;
  if (covering_radius(c, ro) > rho) throw std::logic_error(std::string(who) + ": result failed radius verification");
}

}  // namespace

Code jsl_construct(unsigned q, unsigned m, unsigned n, unsigned rho, JslMode mode, const EnumOptions& opt) {
  if (n > m) return transpose_code(jsl_construct(q, n, m, rho, mode, opt));
  FieldPtr f = default_field(q, m);
  if (rho >= n) return Code::explicit_set(f, n, {0});
  Ambient amb(q, m, n, rho, opt);
  const Word Q = amb.sp.size();
  if (BigCount(Q) * amb.ball.size() > (BigCount(1) << 36)) throw CapExceeded("JSL construction too large");
  std::vector<std::uint32_t> weight(Q, static_cast<std::uint32_t>(amb.ball.size()));
  CoverState cs(Q);
  std::vector<Word> chosen;
  auto cover = [&](Word c) {
    chosen.push_back(c);
    for (Word e : amb.ball) {
      const Word x = amb.shift(c, e);
      if (!cs.mark(x)) continue;
      for (Word e2 : amb.ball) --weight[amb.shift(x, e2)];
    }
  };
  // first stage: an (n, n-2rho, 2rho+1) MRD code has pairwise disjoint balls
  if (2 * rho < n) {
    const Code seed = gabidulin_generator(f, n, n - 2 * rho);
    for (Word w : seed.indices()) cover(w);
  } else {
    cover(0);
  }
  while (cs.uncovered() > 0) {
    const std::uint32_t top = *std::max_element(weight.begin(), weight.end());
    if (mode == JslMode::greedy) {
      cover(static_cast<Word>(std::find(weight.begin(), weight.end(), top) - weight.begin()));
      continue;
    }
    // maximal set of weight-`top` centers with pairwise disjoint uncovered supports:
    // a center whose support meets an earlier pick has lost weight by the time it is reached
    for (Word c = 0; c < Q; ++c) {
      if (weight[c] == top) cover(c);
    }
  }
  Code res = Code::explicit_set(f, n, chosen);
  verify_or_throw(res, rho, "jsl_construct");
  return res;
}

std::optional<Code> local_search(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned K,
                                 const SearchBudget& budget, const EnumOptions& opt) {
  if (n > m) {
    auto c = local_search(q, n, m, rho, K, budget, opt);
    if (!c) return std::nullopt;
    return transpose_code(*c);
  }
  if (K == 0) return std::nullopt;
  Ambient amb(q, m, n, rho, opt);
  const Word Q = amb.sp.size();
  if (K > Q) return std::nullopt;
  std::mt19937_64 rng(budget.seed);
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return budget.time_limit.count() > 0 && std::chrono::steady_clock::now() - start > budget.time_limit;
  };
  std::vector<std::uint16_t> cnt(Q);
  std::vector<bool> in_code(Q);
  std::uniform_int_distribution<Word> pick(0, Q - 1);
  for (unsigned restart = 0; restart <= budget.max_restarts; ++restart) {
    std::fill(cnt.begin(), cnt.end(), 0);
    std::fill(in_code.begin(), in_code.end(), false);
    CoverState cs(Q);
    auto add_word = [&](Word c) {
      in_code[c] = true;
      for (Word e : amb.ball) {
        const Word x = amb.shift(c, e);
        if (cnt[x]++ == 0) cs.mark(x);
      }
    };
    auto remove_word = [&](Word c) {
      in_code[c] = false;
      for (Word e : amb.ball) {
        const Word x = amb.shift(c, e);
        if (--cnt[x] == 0) cs.unmark(x);
      }
    };
    std::vector<Word> code;
    Word tabu = Q;  // last word moved; not moved again immediately
    while (code.size() < K) {
      Word c = pick(rng);
      if (in_code[c]) continue;
      code.push_back(c);
      add_word(c);
    }
    for (std::uint64_t it = 0; it < budget.max_iterations; ++it) {
      if (cs.uncovered() == 0) {
        Code res = Code::explicit_set(amb.f, n, code);
        verify_or_throw(res, rho, "local_search");
        return res;
      }
      if ((it & 63) == 0 && out_of_time()) return std::nullopt;
      // move: some codeword jumps into the ball around a random uncovered vector, choosing the
      // (codeword, target) pair that leaves the fewest uncovered vectors
      Word x = pick(rng);
      while (cs.covered(x)) x = pick(rng);
      std::int64_t best_net = std::numeric_limits<std::int64_t>::min();
      std::uint64_t ties = 0;
      std::size_t i = 0;
      Word best = code[0];
      for (std::size_t ci = 0; ci < K; ++ci) {
        const Word c = code[ci];
        if (K > 1 && tabu == c) continue;
        remove_word(c);
        const std::int64_t loss = static_cast<std::int64_t>(amb.count_uncovered(cs, c));
        for (Word e : amb.ball) {
          const Word y = amb.shift(x, e);
          if (in_code[y]) continue;
          const std::int64_t net = static_cast<std::int64_t>(amb.count_uncovered(cs, y)) - loss;
          if (net > best_net) {
            best_net = net;
            best = y;
            i = ci;
            ties = 1;
          } else if (net == best_net && rng() % ++ties == 0) {
            best = y;
            i = ci;
          }
        }
        add_word(c);
      }
      remove_word(code[i]);
      tabu = best;
      code[i] = best;
      add_word(best);
    }
  }
  return std::nullopt;
}

bool exhaustive_lower_bound(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned K,
                            const SearchBudget& budget, const EnumOptions& opt) {
  const Params p = normalize({q, m, n, rho});
  if (K == 0) return true;
  if (p.rho >= p.n) return false;
  Ambient amb(q, p.m, p.n, p.rho, opt);
  const Word Q = amb.sp.size();
  if (K >= Q) return false;
  const double v = static_cast<double>(amb.ball.size());
  const double estimate = std::pow(v, static_cast<double>(K - 1));
  if (estimate > static_cast<double>(budget.max_nodes) * 1e3) {
    throw Intractable("exhaustive search needs up to " + std::to_string(estimate) + " nodes", estimate);
  }
  std::vector<std::uint16_t> cnt(Q);
  Word uncovered = Q;
  auto add = [&](Word c) {
    for (Word e : amb.ball) uncovered -= (cnt[amb.shift(c, e)]++ == 0);
  };
  auto remove = [&](Word c) {
    for (Word e : amb.ball) uncovered += (--cnt[amb.shift(c, e)] == 0);
  };
  std::uint64_t nodes = 0;
  // codeword 0 is fixed by translation invariance
  add(0);
  auto dfs = [&](auto&& self, unsigned remaining) -> bool {
    if (++nodes > budget.max_nodes) throw Intractable("node budget exhausted", estimate);
    if (uncovered == 0) return true;
    if (remaining == 0) return false;
    if (static_cast<double>(uncovered) > remaining * v) return false;
    Word x = 0;
    while (cnt[x]) ++x;
    // every covering contains a codeword within distance rho of x
    for (Word e : amb.ball) {
      const Word y = amb.shift(x, e);
      add(y);
      const bool found = self(self, remaining - 1);
      remove(y);
      if (found) return true;
    }
    return false;
  };
  return !dfs(dfs, K - 1);
}

bool linear_exhaustive(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned k, const SearchBudget& budget,
                       const EnumOptions& opt) {
  if (k >= n) return false;
  if (rho >= std::min(m, n)) return false;
  if (k == 0) return true;  // {0} has radius min(m, n)
  FieldPtr f = default_field(q, m);
  VectorSpace sp(f, n);
  check_cap(space_size(q, m, n), opt);
  const Word qm = f->order();
  const unsigned r = n - k;
  const BigCount ncodes = space_size(q, m, k * r);
  if (ncodes > budget.max_nodes) {
    throw Intractable("linear search over " + ncodes.str() + " generator matrices", static_cast<double>(ncodes));
  }
  const Word nsyn = static_cast<Word>(space_size(q, m, r));
  std::vector<std::vector<Word>> ball;
  for (Word e : ball_indices(sp, 0, rho, opt)) {
    std::vector<Word> c(n);
    for (unsigned j = 0; j < n; ++j) c[j] = sp.coord(e, j);
    ball.push_back(std::move(c));
  }
  if (ball.size() < nsyn) return true;
  // generator [I_k | A]: every linear code is of this form after a coordinate permutation,
  // which preserves rank distances; x's coset is identified by x_2 - x_1 A
  std::vector<Word> a(k * r, 0);
  std::vector<std::uint32_t> stamp(nsyn, 0);
  std::uint32_t cur = 0;
  for (;;) {
    ++cur;
    Word hit = 0;
    for (std::size_t idx = 0; idx < ball.size(); ++idx) {
      if (ball.size() - idx < nsyn - hit) break;
      const auto& e = ball[idx];
      Word s = 0;
      for (unsigned c = 0; c < r; ++c) {
        Word val = e[k + c];
        for (unsigned i = 0; i < k; ++i) {
          if (e[i]) val = f->sub(val, f->mul(e[i], a[i * r + c]));
        }
        s = s * qm + val;
      }
      if (stamp[s] != cur) {
        stamp[s] = cur;
        if (++hit == nsyn) return false;
      }
    }
    std::size_t t = 0;
    while (t < a.size() && ++a[t] == qm) a[t++] = 0;
    if (t == a.size()) break;
  }
  return true;
}

}  // namespace rankcover
