#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncard/exact_count.hpp"
#include "ncard/hand_counters.hpp"

namespace ncard {

inline constexpr int kTableMinN = 5;
inline constexpr int kTableMaxN = 52;

struct TableRow {
  int n = 0;
  ExactCount total;
  ExactCount straight;
  ExactCount flush;
  ExactCount full_house;

  ExactCount of(Category c) const;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Rows sorted by n ascending with no gaps.
struct CountsTable {
  std::vector<TableRow> rows;

  const TableRow& row(int n) const;  // throws std::out_of_range
  friend bool operator==(const CountsTable&, const CountsTable&) = default;
};

TableRow compute_row(HandSize n);

// Rows n_min..n_max, one OpenMP task per row. Throws std::invalid_argument
// unless 5 <= n_min <= n_max <= 52.
CountsTable build_table(int n_min = kTableMinN, int n_max = kTableMaxN);
// Same rows computed on the calling thread only.
CountsTable build_table_serial(int n_min = kTableMinN, int n_max = kTableMaxN);

struct CrossoverReport {
  Category a;
  Category b;
  std::optional<int> first_n;  // smallest n with count_a(n) > count_b(n)
  int range_min;
  int range_max;
};

CrossoverReport find_crossover(const CountsTable& table, Category a, Category b);
CrossoverReport find_crossover(Category a, Category b, int n_min = kTableMinN, int n_max = kTableMaxN);

enum class Format { kCsv, kMarkdown, kJson, kSvg };
std::optional<Format> parse_format(std::string_view text);

struct EmitOptions {
  bool probabilities = false;  // markdown/json: add probability columns
  bool exact_fractions = false;  // render probabilities as reduced fractions
  int significant_digits = 6;
};

inline constexpr std::string_view kCsvHeader = "n,total,straight,flush,full_house";

// Throws std::invalid_argument on an empty table.
std::string emit(const CountsTable& table, Format format, const EmitOptions& options = {});

// Inverse of the CSV emitter. Throws std::invalid_argument on malformed input.
CountsTable parse_csv(std::string_view text);

struct PlotPoint {
  int n;
  double straight;
  double flush;
  double full_house;

  double of(Category c) const;
};

std::vector<PlotPoint> plot_series(const CountsTable& table);
// Probability series as CSV: n,straight,flush,full_house (decimal strings).
std::string emit_plot_data(const CountsTable& table, int significant_digits = 12);

}  // namespace ncard
