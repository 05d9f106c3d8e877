#include "ncard/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gtest/gtest.h"

namespace ncard {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CountsTable& full_table() {
  static const CountsTable table = build_table();
  return table;
}

TEST(BuildTable, MatchesGoldenTableCellForCell) {
  const std::string golden_text = read_file(std::string(NCARD_TEST_DATA_DIR) + "/table1.csv");
  ASSERT_FALSE(golden_text.empty());
  const CountsTable golden = parse_csv(golden_text);
  ASSERT_EQ(golden.rows.size(), 48u);
  ASSERT_EQ(full_table().rows.size(), 48u);
  for (std::size_t i = 0; i < golden.rows.size(); ++i) {
    EXPECT_EQ(full_table().rows[i], golden.rows[i]) << "n=" << golden.rows[i].n;
  }
  EXPECT_EQ(emit(full_table(), Format::kCsv), golden_text);
}

TEST(BuildTable, Rows) {
  const TableRow& r10 = full_table().row(10);
  EXPECT_EQ(r10.total, ExactCount(15820024220ULL));
  EXPECT_EQ(r10.straight, ExactCount(4051217344ULL));
  EXPECT_EQ(r10.flush, ExactCount(3585287134ULL));
  EXPECT_EQ(r10.full_house, ExactCount(3087272188ULL));
  EXPECT_EQ(full_table().row(52), (TableRow{52, 1, 1, 1, 1}));
  const TableRow& r26 = full_table().row(26);
  EXPECT_EQ(r26.total, ExactCount(495918532948104ULL));
  EXPECT_EQ(r26.straight, ExactCount(493971477605994ULL));
  EXPECT_EQ(r26.flush, ExactCount(495918532948104ULL));
  EXPECT_EQ(r26.full_house, ExactCount(495905472254088ULL));
  EXPECT_THROW(full_table().row(4), std::out_of_range);
}

TEST(BuildTable, ParallelMatchesSerial) { EXPECT_EQ(build_table(), build_table_serial()); }

TEST(BuildTable, RejectsBadRanges) {
  EXPECT_THROW(build_table(4, 10), std::invalid_argument);
  EXPECT_THROW(build_table(5, 53), std::invalid_argument);
  EXPECT_THROW(build_table(12, 11), std::invalid_argument);
  EXPECT_EQ(build_table(7, 7).rows.size(), 1u);
}

TEST(FindCrossover, PaperClaims) {
  EXPECT_EQ(find_crossover(full_table(), Category::kFlush, Category::kStraight).first_n, 12);
  EXPECT_EQ(find_crossover(full_table(), Category::kFullHouse, Category::kStraight).first_n, 20);
  EXPECT_FALSE(find_crossover(full_table(), Category::kFullHouse, Category::kFlush).first_n.has_value());
  const CrossoverReport r = find_crossover(Category::kFlush, Category::kStraight, 5, 11);
  EXPECT_FALSE(r.first_n.has_value());
  EXPECT_EQ(r.range_min, 5);
  EXPECT_EQ(r.range_max, 11);
  EXPECT_THROW(find_crossover(full_table(), Category::kFlush, Category::kFlush), std::invalid_argument);
}

TEST(FindCrossover, ConsistentWithNeighbouringRows) {
  for (Category a : kAllCategories) {
    for (Category b : kAllCategories) {
      if (a == b) continue;
      const auto r = find_crossover(full_table(), a, b);
      if (!r.first_n) continue;
      EXPECT_GT(full_table().row(*r.first_n).of(a), full_table().row(*r.first_n).of(b));
      if (*r.first_n > kTableMinN) {
        EXPECT_LE(full_table().row(*r.first_n - 1).of(a), full_table().row(*r.first_n - 1).of(b));
      }
    }
  }
}

TEST(Emit, CsvRowsAndRoundTrip) {
  const std::string csv = emit(full_table(), Format::kCsv);
  EXPECT_EQ(csv.rfind("n,total,straight,flush,full_house\n5,2598960,10240,5148,3744\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  const CountsTable parsed = parse_csv(csv);
  EXPECT_EQ(parsed, full_table());
  // Crossovers re-derived from the emitted CSV agree.
  for (Category a : kAllCategories) {
    for (Category b : kAllCategories) {
      if (a != b) EXPECT_EQ(find_crossover(parsed, a, b).first_n, find_crossover(full_table(), a, b).first_n);
    }
  }
}

TEST(ParseCsv, RejectsMalformedInput) {
  EXPECT_THROW(parse_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total,straight,flush,full_house\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total,straight,flush,full_house\n5,2598960,10240,5148\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total,straight,flush,full_house\n5,2598960,1.5e4,5148,3744\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total,straight,flush,full_house\n5,10,11,0,0\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("n,total,straight,flush,full_house\n5,1,0,0,0\n7,1,0,0,0\n"), std::invalid_argument);
}

TEST(Emit, JsonUsesStringCountsAndStableKeys) {
  const auto doc = nlohmann::ordered_json::parse(emit(full_table(), Format::kJson));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 48u);
  const auto& first = doc.front();
  std::vector<std::string> keys;
  for (const auto& [k, v] : first.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "total", "straight", "flush", "full_house"}));
  EXPECT_EQ(first["n"], 5);
  EXPECT_EQ(first["total"], "2598960");
  EXPECT_EQ(doc[21]["total"], "495918532948104");
  EXPECT_TRUE(doc[21]["straight"].is_string());
}

TEST(Emit, JsonProbabilitiesOnRequest) {
  EmitOptions options;
  options.probabilities = true;
  const auto doc = nlohmann::ordered_json::parse(emit(build_table(5, 5), Format::kJson, options));
  EXPECT_EQ(doc[0]["straight_probability"], "0.00394004");
  options.exact_fractions = true;
  const auto exact = nlohmann::ordered_json::parse(emit(build_table(5, 5), Format::kJson, options));
  EXPECT_EQ(exact[0]["straight_probability"], "128/32487");
}

TEST(Emit, MarkdownMirrorsTableLayout) {
  const std::string md = emit(build_table(5, 6), Format::kMarkdown);
  std::istringstream lines(md);
  std::string header, rule, row5;
  std::getline(lines, header);
  std::getline(lines, rule);
  std::getline(lines, row5);
  EXPECT_EQ(header, "| n | number of hands | number of straight | number of flush | number of full house |");
  EXPECT_EQ(row5, "| 5 | 2598960 | 10240 | 5148 | 3744 |");
}

TEST(Emit, SvgHasThreeSeriesAndTicks) {
  const std::string svg = emit(full_table(), Format::kSvg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("id=\"series-straight\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"series-flush\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"series-full_house\""), std::string::npos);
  for (int n = 5; n <= 50; n += 5) {
    EXPECT_NE(svg.find(">" + std::to_string(n) + "</text>"), std::string::npos) << n;
  }
  // Flush reaches certainty at n = 17: x = 70 + 12/47 * 620, y = top of the plot.
  const std::size_t flush = svg.find("id=\"series-flush\"");
  const std::size_t end = svg.find("/>", flush);
  EXPECT_NE(svg.substr(flush, end - flush).find("228.30,30.00"), std::string::npos);
}

TEST(PlotSeries, ValuesInUnitIntervalAndFlushCertainAtSeventeen) {
  const auto points = plot_series(full_table());
  ASSERT_EQ(points.size(), 48u);
  for (const PlotPoint& p : points) {
    for (Category c : kAllCategories) {
      EXPECT_GE(p.of(c), 0.0);
      EXPECT_LE(p.of(c), 1.0);
    }
  }
  EXPECT_EQ(points[17 - 5].flush, 1.0);
  EXPECT_LT(points[16 - 5].flush, 1.0);
  const std::string data = emit_plot_data(full_table(), 6);
  EXPECT_EQ(data.rfind("n,straight,flush,full_house\n5,0.00394004,0.00198079,0.00144058\n", 0), 0u);
}

TEST(Emit, RejectsEmptyTable) { EXPECT_THROW(emit(CountsTable{}, Format::kCsv), std::invalid_argument); }

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_EQ(parse_format("markdown"), Format::kMarkdown);
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_EQ(parse_format("svg-plot"), Format::kSvg);
  EXPECT_FALSE(parse_format("xml").has_value());
}

}  // namespace
}  // namespace ncard
