#include "ncard/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ncard/probability.hpp"

namespace ncard {
namespace {

void check_range(int n_min, int n_max) {
  if (n_min < kTableMinN || n_max > kTableMaxN || n_min > n_max) {
    throw std::invalid_argument("table range must satisfy 5 <= from <= to <= 52, got " +
                                std::to_string(n_min) + ".." + std::to_string(n_max));
  }
}

std::string render_probability(ExactCount count, int n, const EmitOptions& options) {
  const ExactProbability p = probability(count, HandSize(n));
  return options.exact_fractions ? p.fraction() : p.decimal(options.significant_digits);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string emit_csv(const CountsTable& table) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  for (const TableRow& r : table.rows) {
    out += std::to_string(r.n) + ',' + r.total.to_string() + ',' + r.straight.to_string() + ',' +
           r.flush.to_string() + ',' + r.full_house.to_string() + '\n';
  }
  return out;
}

std::string emit_markdown(const CountsTable& table, const EmitOptions& options) {
  std::ostringstream os;
  os << "| n | number of hands | number of straight | number of flush | number of full house |";
  if (options.probabilities) os << " P(straight) | P(flush) | P(full house) |";
  os << '\n' << "|---:|---:|---:|---:|---:|";
  if (options.probabilities) os << "---:|---:|---:|";
  os << '\n';
  for (const TableRow& r : table.rows) {
    os << "| " << r.n << " | " << r.total << " | " << r.straight << " | " << r.flush << " | " << r.full_house
       << " |";
    if (options.probabilities) {
      for (Category c : kAllCategories) os << ' ' << render_probability(r.of(c), r.n, options) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const CountsTable& table, const EmitOptions& options) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TableRow& r : table.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["total"] = r.total.to_string();
    row["straight"] = r.straight.to_string();
    row["flush"] = r.flush.to_string();
    row["full_house"] = r.full_house.to_string();
    if (options.probabilities) {
      for (Category c : kAllCategories) {
        row[std::string(to_string(c)) + "_probability"] = render_probability(r.of(c), r.n, options);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + '\n';
}

std::string emit_svg(const CountsTable& table) {
  constexpr double kLeft = 70, kRight = 690, kTop = 30, kBottom = 390;
  const auto x_of = [&](double n) {
    return kLeft + (n - kTableMinN) / static_cast<double>(kTableMaxN - kTableMinN) * (kRight - kLeft);
  };
  const auto y_of = [&](double p) { return kBottom - p * (kBottom - kTop); };

  struct Style {
    Category category;
    const char* label;
    const char* color;
  };
  static constexpr std::array<Style, 3> kStyles = {{{Category::kStraight, "straight", "#1f77b4"},
                                                    {Category::kFlush, "flush", "#d62728"},
                                                    {Category::kFullHouse, "full house", "#2ca02c"}}};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 720 440\" width=\"720\" height=\"440\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"720\" height=\"440\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\"" << kBottom
     << "\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kBottom << "\"/>\n";
  for (int n = 5; n <= kTableMaxN; n += 5) {
    const std::string x = fixed2(x_of(n));
    os << "<line x1=\"" << x << "\" y1=\"" << kBottom << "\" x2=\"" << x << "\" y2=\"" << kBottom + 5
       << "\"/>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const std::string y = fixed2(y_of(i * 0.25));
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int n = 5; n <= kTableMaxN; n += 5) {
    os << "<text x=\"" << fixed2(x_of(n)) << "\" y=\"" << kBottom + 20 << "\" text-anchor=\"middle\">" << n
       << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed2(y_of(i * 0.25) + 4) << "\" text-anchor=\"end\">"
       << fixed2(i * 0.25) << "</text>\n";
  }
  os << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 40
     << "\" text-anchor=\"middle\">n (cards in hand)</text>\n";
  os << "<text x=\"20\" y=\"" << (kTop + kBottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << (kTop + kBottom) / 2 << ")\">probability</text>\n";
  os << "</g>\n";

  const std::vector<PlotPoint> points = plot_series(table);
  for (std::size_t i = 0; i < kStyles.size(); ++i) {
    const Style& s = kStyles[i];
    os << "<polyline id=\"series-" << to_string(s.category) << "\" fill=\"none\" stroke=\"" << s.color
       << "\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != 0) os << ' ';
      os << fixed2(x_of(points[j].n)) << ',' << fixed2(y_of(points[j].of(s.category)));
    }
    os << "\"/>\n";
    const double ly = kBottom - 60 + 18 * static_cast<double>(i);
    os << "<line x1=\"560\" y1=\"" << ly << "\" x2=\"585\" y2=\"" << ly << "\" stroke=\"" << s.color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"592\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

ExactCount TableRow::of(Category c) const {
  switch (c) {
    case Category::kStraight: return straight;
    case Category::kFlush: return flush;
    case Category::kFullHouse: return full_house;
  }
  throw std::invalid_argument("unknown category");
}

const TableRow& CountsTable::row(int n) const {
  for (const TableRow& r : rows) {
    if (r.n == n) return r;
  }
  throw std::out_of_range("no table row for n = " + std::to_string(n));
}

TableRow compute_row(HandSize n) {
  return {n.value(), total_hands(n), count_straight(n), count_flush(n), count_full_house(n)};
}

CountsTable build_table(int n_min, int n_max) {
  check_range(n_min, n_max);
  CountsTable table;
  table.rows.resize(static_cast<std::size_t>(n_max - n_min + 1));
  // Warm the validated g table before fanning out.
  (void)g(0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = n_min; n <= n_max; ++n) {
    table.rows[static_cast<std::size_t>(n - n_min)] = compute_row(HandSize(n));
  }
  return table;
}

CountsTable build_table_serial(int n_min, int n_max) {
  check_range(n_min, n_max);
  CountsTable table;
  for (int n = n_min; n <= n_max; ++n) table.rows.push_back(compute_row(HandSize(n)));
  return table;
}

CrossoverReport find_crossover(const CountsTable& table, Category a, Category b) {
  if (table.rows.empty()) throw std::invalid_argument("find_crossover needs a nonempty table");
  if (a == b) throw std::invalid_argument("find_crossover needs two distinct categories");
  CrossoverReport report{a, b, std::nullopt, table.rows.front().n, table.rows.back().n};
  for (const TableRow& r : table.rows) {
    if (r.of(a) > r.of(b)) {
      report.first_n = r.n;
      break;
    }
  }
  return report;
}

CrossoverReport find_crossover(Category a, Category b, int n_min, int n_max) {
  return find_crossover(build_table(n_min, n_max), a, b);
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::kCsv;
  if (text == "markdown" || text == "md") return Format::kMarkdown;
  if (text == "json") return Format::kJson;
  if (text == "svg" || text == "svg-plot") return Format::kSvg;
  return std::nullopt;
}

std::string emit(const CountsTable& table, Format format, const EmitOptions& options) {
  if (table.rows.empty()) throw std::invalid_argument("cannot emit an empty table");
  switch (format) {
    case Format::kCsv: return emit_csv(table);
    case Format::kMarkdown: return emit_markdown(table, options);
    case Format::kJson: return emit_json(table, options);
    case Format::kSvg: return emit_svg(table);
  }
  throw std::invalid_argument("unknown format");
}

CountsTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw std::invalid_argument("CSV must start with header '" + std::string(kCsvHeader) + "'");
  }
  CountsTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 5) {
      throw std::invalid_argument("CSV line " + std::to_string(i + 1) + " does not have 5 fields");
    }
    TableRow row;
    const ExactCount n = ExactCount::parse(fields[0]);
    if (n > ExactCount(kTableMaxN)) throw std::invalid_argument("CSV row has n > 52");
    row.n = static_cast<int>(n.to_u64());
    row.total = ExactCount::parse(fields[1]);
    row.straight = ExactCount::parse(fields[2]);
    row.flush = ExactCount::parse(fields[3]);
    row.full_house = ExactCount::parse(fields[4]);
    if (!table.rows.empty() && row.n != table.rows.back().n + 1) {
      throw std::invalid_argument("CSV rows must be consecutive in n");
    }
    if (row.straight > row.total || row.flush > row.total || row.full_house > row.total) {
      throw std::invalid_argument("CSV row " + std::to_string(row.n) + " has a count above its total");
    }
    table.rows.push_back(row);
  }
  if (table.rows.empty()) throw std::invalid_argument("CSV has no rows");
  return table;
}

double PlotPoint::of(Category c) const {
  switch (c) {
    case Category::kStraight: return straight;
    case Category::kFlush: return flush;
    case Category::kFullHouse: return full_house;
  }
  return 0.0;
}

std::vector<PlotPoint> plot_series(const CountsTable& table) {
  std::vector<PlotPoint> out;
  out.reserve(table.rows.size());
  for (const TableRow& r : table.rows) {
    const HandSize n(r.n);
    out.push_back({r.n, probability(r.straight, n).to_double(), probability(r.flush, n).to_double(),
                   probability(r.full_house, n).to_double()});
  }
  return out;
}

std::string emit_plot_data(const CountsTable& table, int significant_digits) {
  std::string out = "n,straight,flush,full_house\n";
  for (const TableRow& r : table.rows) {
    const HandSize n(r.n);
    out += std::to_string(r.n);
    for (Category c : kAllCategories) out += ',' + probability(r.of(c), n).decimal(significant_digits);
    out += '\n';
  }
  return out;
}

}  // namespace ncard
