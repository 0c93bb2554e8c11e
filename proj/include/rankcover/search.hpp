#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankcover/codes.hpp"

namespace rankcover {

struct SearchBudget {
  std::uint64_t max_iterations = 20000;  // moves per restart (local search)
  unsigned max_restarts = 50;
  std::uint64_t seed = 1;
  std::chrono::milliseconds time_limit{0};  // 0 = unlimited
  std::uint64_t max_nodes = 100'000'000;    // exhaustive searches
};

/// Thrown when an exhaustive search would exceed its budget.
class Intractable : public std::runtime_error {
 public:
  Intractable(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// Bitmap of covered vector indices.
class CoverState {
 public:
  explicit CoverState(Word size = 0);
  bool covered(Word x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
  /// returns true if x was newly covered
  bool mark(Word x);
  void unmark(Word x);
  Word size() const { return size_; }
  Word uncovered() const { return uncovered_; }
  const std::uint64_t* data() const { return bits_.data(); }
  Word popcount() const;

 private:
  Word size_ = 0, uncovered_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class JslMode { staged, greedy };

/// Greedy covering construction; seeded with an (n, n-2rho) MRD code when 2rho < n.
Code jsl_construct(unsigned q, unsigned m, unsigned n, unsigned rho, JslMode mode = JslMode::staged,
                   const EnumOptions& opt = {});
/// Hill climbing over size-K codes; returns a verified covering or nothing.
std::optional<Code> local_search(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned K,
                                 const SearchBudget& budget = {}, const EnumOptions& opt = {});
/// true: no code of size K has covering radius <= rho
bool exhaustive_lower_bound(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned K,
                            const SearchBudget& budget = {}, const EnumOptions& opt = {});
/// true: no linear code of dimension k has covering radius <= rho
bool linear_exhaustive(unsigned q, unsigned m, unsigned n, unsigned rho, unsigned k,
                       const SearchBudget& budget = {}, const EnumOptions& opt = {});

}  // namespace rankcover
