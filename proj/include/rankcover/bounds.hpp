#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rankcover/bigcount.hpp"
#include "rankcover/qcombinatorics.hpp"

namespace rankcover {

struct Params {
  unsigned q = 2, m = 0, n = 0, rho = 0;
};

/// transpose symmetry: K_R(q^m,n,rho) = K_R(q^n,m,rho); returns the n <= m form
Params normalize(Params p);

/// Supplies I(rho, d) = |B_rho(c1) ∩ B_rho(c2)| with d(c1,c2) = d: closed forms where known,
/// otherwise enumeration within the cap; memoized.
class IntersectionOracle {
 public:
  explicit IntersectionOracle(EnumOptions opt = {}, bool allow_enumeration = true);
  std::optional<BigCount> value(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned d);

 private:
  EnumOptions opt_;
  bool enumerate_;
  std::mutex mu_;
  std::map<std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned>, std::optional<BigCount>> memo_;
};

IntersectionOracle& default_oracle();

// packing
BigCount packing_max_cardinality(unsigned q, unsigned m, unsigned n, unsigned d);

// lower bounds on K_R (precondition 0 < rho < n <= m after normalization)
BigCount sphere_covering_lower(unsigned q, unsigned m, unsigned n, unsigned rho);
BigCount floor3_lower(unsigned q, unsigned m, unsigned n, unsigned rho);

struct GeneralizedCohen {
  BigCount value;              // ceiling of the best admitted right-hand side
  unsigned l = 0;              // level that achieved it
  unsigned levels_admitted = 0;
  std::vector<Rational> rhs;   // right-hand side per admitted level
};
std::optional<GeneralizedCohen> cohen_generalized(unsigned q, unsigned m, unsigned n, unsigned rho,
                                                  IntersectionOracle& oracle = default_oracle());
std::optional<BigCount> cohen_generalized_lower(unsigned q, unsigned m, unsigned n, unsigned rho,
                                                IntersectionOracle& oracle = default_oracle());
/// right-hand side of the generalized bound at a fixed level l (nullopt if some I is unavailable)
std::optional<Rational> cohen_rhs(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned l,
                                  IntersectionOracle& oracle = default_oracle());
/// level 0: (q^{mn} - I(rho,n)) / (v(rho) - I(rho,n))
std::optional<BigCount> cohen_l0_lower(unsigned q, unsigned m, unsigned n, unsigned rho,
                                       IntersectionOracle& oracle = default_oracle());
/// closed form for rho <= n/2 using I(rho,2rho) = q^{rho^2}[2rho rho]
std::optional<BigCount> cohen_closed_lower(unsigned q, unsigned m, unsigned n, unsigned rho);

BigCount excess_epsilon(unsigned q, unsigned m, unsigned n, unsigned rho);
std::optional<BigCount> excess_lower(unsigned q, unsigned m, unsigned n, unsigned rho);

struct Quadratic {
  BigCount a, b, c;
  BigCount value;  // smallest K >= max(sphere, 3) with aK^2 - bK + c >= 0
};
Quadratic excess_quadratic(unsigned q, unsigned m, unsigned n);
BigCount excess_quadratic_lower(unsigned q, unsigned m, unsigned n);

// upper bounds
using Partition = std::vector<std::pair<unsigned, unsigned>>;  // blocks (n_i, rho_i)
BigCount trivial_upper(unsigned q, unsigned m, unsigned n, unsigned rho);
BigCount superadditive_upper(unsigned q, unsigned m, unsigned n, unsigned rho,
                             const std::optional<Partition>& partition = std::nullopt,
                             Partition* best = nullptr);
BigCount mrd_embedding_upper(unsigned q, unsigned m, unsigned n, unsigned rho);

struct ProbabilisticBound {
  BigCount value;
  bool integer_hit = false;  // 1/(1 - log_Q(Q - v)) indistinguishable from an integer
  unsigned digits = 0;       // working precision used
};
ProbabilisticBound probabilistic_bound(unsigned q, unsigned m, unsigned n, unsigned rho);
BigCount probabilistic_upper(unsigned q, unsigned m, unsigned n, unsigned rho);

/// floor((q^{mn}/v) H_v)
BigCount jsl_upper(unsigned q, unsigned m, unsigned n, unsigned rho);
struct JslTerms {
  unsigned a = 0;
  BigCount k, j, s, t;
};
JslTerms jsl_terms(unsigned q, unsigned m, unsigned n, unsigned rho);
/// floor(k (1/t - 1/v) + (q^{mn}/v) H_t), t = min{s, j}
BigCount jsl_refined_upper(unsigned q, unsigned m, unsigned n, unsigned rho);
/// floor((q^{mn}/v)(ln v + gamma + 1/(2v + 1/3)))
BigCount jsl_loose_upper(unsigned q, unsigned m, unsigned n, unsigned rho);

/// certified floor of the harmonic number scaled: floor(scale * H_k + offset)
BigCount floor_harmonic_expr(const BigCount& k, const Rational& scale, const Rational& offset);

// linear codes
struct DimensionBounds {
  unsigned k_lower = 0, k_upper = 0;
};
DimensionBounds linear_dimension_bounds(unsigned q, unsigned m, unsigned n, unsigned rho);
enum class CodeClass { any, gabidulin, els, gabidulin_cartesian_square_field };
/// For gabidulin_cartesian_square_field, rho is read as the minimum distance d of the factor
/// code and the covering radius d - 1 is returned (factor length equals m).
std::optional<unsigned> linear_dimension_exact(unsigned q, unsigned m, unsigned n, unsigned rho, CodeClass cls);

// asymptotics
enum class AsymptoticKind { volume, covering };
double asymptotic_exponent(double b, double x, AsymptoticKind kind);
/// log_{q^{mn}} x
double log_base_space(const BigCount& x, unsigned q, unsigned m, unsigned n);

// combined report
enum class BoundKind { lower, upper };

struct BoundEntry {
  std::string name;    // operation name
  std::string letter;  // table tag
  BoundKind kind = BoundKind::lower;
  bool applicable = false;
  BigCount value;
  std::string note;
};

struct BoundOptions {
  bool bruteforce_intersections = true;
  bool constructive = false;  // run JSL / exhaustive search when the space is small
  std::uint64_t constructive_cap = std::uint64_t(1) << 16;
  EnumOptions enumeration;
  IntersectionOracle* oracle = nullptr;  // defaults to a shared memoized oracle
};

struct BoundReport {
  Params params;       // as requested
  Params normalized;   // n <= m
  bool trivial = false;
  std::vector<BoundEntry> entries;
  BigCount best_lower, best_upper;
  std::vector<std::string> lower_letters, upper_letters;

  bool exact() const { return best_lower == best_upper; }
  const BoundEntry* find(const std::string& letter) const;
};

BoundReport best_bounds(unsigned q, unsigned m, unsigned n, unsigned rho, const BoundOptions& opt = {});

}  // namespace rankcover
