#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rankcover/bigcount.hpp"
#include "rankcover/rank_space.hpp"

namespace rankcover {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  std::uint64_t cap = std::uint64_t(1) << 26;  // max number of vectors enumerated
  unsigned threads = 0;                        // 0 = hardware concurrency
};

/// α(m,u) = prod_{i<u} (q^m - q^i); 0 when u > m
BigCount alpha(unsigned m, unsigned u, unsigned q);
/// Gaussian binomial [n u]_q; 0 when u > n
BigCount gaussian(unsigned n, unsigned u, unsigned q);
/// N_u: number of rank-u vectors in GF(q^m)^n
BigCount num_rank_u(unsigned q, unsigned m, unsigned n, unsigned u);
/// V_r: size of a rank-radius-r ball (saturates at q^{mn})
BigCount ball_volume(unsigned q, unsigned m, unsigned n, unsigned r);

struct KqApprox {
  unsigned q = 2;
  Real value;        // truncated product; the true constant lies in [value - error_bound, value]
  Real error_bound;
  Real lower() const { return value - error_bound; }
  Real upper() const { return value; }
};
KqApprox kq_constant(unsigned q, double precision = 1e-40);

struct VolumeBounds {
  BigCount lower;  // q^{r(m+n-r)}
  Real upper;      // K_q^{-1} q^{r(m+n-r)}, rounded outward
};
VolumeBounds volume_bounds(unsigned q, unsigned m, unsigned n, unsigned r);

/// |B_r(c1) ∩ B_1(c2)| for d(c1,c2) = r >= 1
BigCount intersection_ball_radius1(unsigned q, unsigned m, unsigned n, unsigned r);
/// |B_s(c1) ∩ B_{r-s}(c2)| for d(c1,c2) = r
BigCount intersection_complementary(unsigned q, unsigned m, unsigned n, unsigned r, unsigned s);

/// (1, a, ..., a^{d-1}, 0, ..., 0)
RankVector canonical_center(const FieldPtr& f, unsigned n, unsigned d);
/// |B_r(0) ∩ B_s(c)| with c the canonical rank-d center, by enumeration of the whole space
BigCount intersection_bruteforce(unsigned q, unsigned m, unsigned n, unsigned r, unsigned s, unsigned d,
                                 const EnumOptions& opt = {});
/// |B_r(c1) ∩ B_s(c2)| for arbitrary centers
BigCount intersection_count(const RankVector& c1, const RankVector& c2, unsigned r, unsigned s,
                            const EnumOptions& opt = {});

std::vector<RankVector> ball_enumerate(const RankVector& center, unsigned r, const EnumOptions& opt = {});
/// indices of all vectors within distance r of the center, increasing
std::vector<Word> ball_indices(const VectorSpace& space, Word center, unsigned r, const EnumOptions& opt = {});

void check_cap(const BigCount& size, const EnumOptions& opt);

}  // namespace rankcover
