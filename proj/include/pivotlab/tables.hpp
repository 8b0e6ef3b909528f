#pragma once

// Recomputation of the five result tables with embedded golden values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pivotlab {

// Exact non-negative rational (counts have den = 1).
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Rounded half up to `digits` decimals.
  std::string decimal(int digits) const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct TableCell {
  std::string column;
  Rational value;
  // Decimal places used for display and comparison (0 for counts).
  int digits = 0;
  std::optional<std::string> golden;
  bool matches = true;
  bool sampled = false;

  std::string display() const { return value.decimal(digits); }
};

struct TableRow {
  int n = 0;
  std::vector<TableCell> cells;
  // Columns left out because n is above their size ceiling.
  std::vector<std::string> skipped;
};

struct TableResult {
  int table = 0;
  std::string title;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  // Internal consistency failures (e.g. i > t), one message each.
  std::vector<std::string> inconsistencies;
  // Cells whose value differs from the golden value.
  std::vector<std::string> mismatches;

  bool ok() const { return inconsistencies.empty() && mismatches.empty(); }
};

struct TableOptions {
  int threads = 0;
  int min_n = 1;
  // Raises every column ceiling to at least this n (0: defaults only).
  int override_limit = 0;
  // Table 1 random column beyond the exhaustive range: number of sampled
  // functions per n (0 leaves those cells out). Sampled cells are never
  // compared against golden values.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

// Column names of a table (1..5).
std::vector<std::string> table_columns(int table);
// Golden value text of (table, column, n), if the paper lists one.
std::optional<std::string> table_golden(int table, const std::string& column, int n);
// Largest n computed by default for a column.
int table_column_limit(int table, const std::string& column);

// Throws std::invalid_argument for an unknown table and BudgetError when no
// cell at all fits the ceilings.
TableResult compute_table(int table, int max_n, const TableOptions& options = {});

// Average IH flat count over all Boolean functions of n variables, by a
// sweep over functions without affine terms (affine terms never change
// flatness). Exhaustive; n <= 5.
Rational average_flat_random(int n, int threads = 0);
// Average IH flat count over all labelled graphs on n vertices, which equals
// the average over all quadratic Boolean functions.
Rational average_flat_quadratic(int n, int threads = 0);
// Sampled estimate of average_flat_random with a seeded generator.
Rational sample_flat_random(int n, std::uint64_t samples, std::uint64_t seed, int threads = 0);

}  // namespace pivotlab
