#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankcover/bounds.hpp"

namespace rankcover {

/// One published table cell. Table "I" holds bounds on K_R, table "II" bounds on k.
struct GoldenEntry {
  std::string table;
  unsigned m = 0, n = 0, rho = 0;
  BigCount lower, upper;
  std::string lower_letter, upper_letter;
};

std::string data_path(const std::string& relative);
std::vector<GoldenEntry> load_golden(const std::string& path);

/// letters backed by a closed-form bound (compared exactly); the rest come from searches
bool analytic_letter(const std::string& letter);
/// value of the bound tagged by a table letter; nullopt when not applicable
std::optional<BigCount> bound_by_letter(const std::string& letter, unsigned q, unsigned m, unsigned n, unsigned rho,
                                        IntersectionOracle& oracle = default_oracle());

struct DiffLine {
  GoldenEntry entry;
  std::string side;  // "lower" or "upper"
  std::string letter;
  bool analytic = false;
  std::optional<BigCount> ours;
  bool ok = false;
  std::string detail;
};

struct DiffOptions {
  bool analytic_only = false;
  unsigned max_m = 7;
  IntersectionOracle* oracle = nullptr;
};
std::vector<DiffLine> diff_table1(const std::vector<GoldenEntry>& golden, const DiffOptions& opt = {});

// linear table: bounds on the dimension k of linear codes
struct LinearCell {
  unsigned m = 0, n = 0, rho = 0;
  unsigned lower = 0, upper = 0;
  std::string lower_letter, upper_letter;  // empty when exact by the dimension criterion
};
struct LinearTableOptions {
  unsigned min_m = 4, max_m = 8;
  bool exhaustive = false;  // run linear_exhaustive / known-code checks where tractable
};
LinearCell linear_cell(unsigned q, unsigned m, unsigned n, unsigned rho, const LinearTableOptions& opt = {});
std::vector<LinearCell> linear_table(unsigned q, const LinearTableOptions& opt = {});
std::vector<DiffLine> diff_table2(const std::vector<GoldenEntry>& golden, const LinearTableOptions& opt = {});

std::vector<BoundReport> bounds_table(unsigned q, unsigned min_m, unsigned max_m, const BoundOptions& opt = {});

std::string display_letter(const std::vector<std::string>& letters, bool lower);
std::string render_bounds_table(const std::vector<BoundReport>& reports);
std::string render_bounds_csv(const std::vector<BoundReport>& reports);
std::string render_linear_table(const std::vector<LinearCell>& cells);
std::string render_linear_csv(const std::vector<LinearCell>& cells);
std::string render_diff(const std::vector<DiffLine>& lines, bool only_failures);

}  // namespace rankcover
