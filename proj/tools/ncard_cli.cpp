// ncard: exact straight / flush / full house counts for n-card hands.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncard/hand_counters.hpp"
#include "ncard/oracle.hpp"
#include "ncard/probability.hpp"
#include "ncard/report.hpp"
#include "ncard/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ncard::Category category_arg(const std::string& text) {
  if (auto c = ncard::parse_category(text)) return *c;
  throw UsageError("unknown category '" + text + "' (expected straight, flush or full_house)");
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << body;
}

ncard::GTable parse_g_table(const std::string& text) {
  ncard::GTable table{};
  std::stringstream ss(text);
  std::string field;
  std::size_t i = 0;
  while (std::getline(ss, field, ',')) {
    if (i >= table.size()) throw UsageError("--g-table needs exactly 14 comma-separated values");
    table[i++] = ncard::ExactCount::parse(field);
  }
  if (i != table.size()) throw UsageError("--g-table needs exactly 14 comma-separated values");
  return table;
}

std::string render(const ncard::ExactProbability& p, bool exact, int digits) {
  return exact ? p.fraction() : p.decimal(digits);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of n-card hands containing a straight, flush or full house"};
  app.require_subcommand(1);

  int count_n = 0;
  bool exact = false;
  int digits = 6;
  auto* count_cmd = app.add_subcommand("count", "Counts and probabilities for one hand size");
  count_cmd->add_option("n", count_n, "Hand size (0..52)")->required();
  count_cmd->add_flag("--exact", exact, "Print probabilities as reduced fractions");
  count_cmd->add_option("--digits", digits, "Significant digits for probabilities")->check(CLI::Range(1, 40));

  int from = ncard::kTableMinN;
  int to = ncard::kTableMaxN;
  std::string format = "csv";
  bool with_probabilities = false;
  std::string out_path;
  auto* table_cmd = app.add_subcommand("table", "Counts table for a range of hand sizes");
  table_cmd->add_option("--from", from, "Smallest hand size (>= 5)");
  table_cmd->add_option("--to", to, "Largest hand size (<= 52)");
  table_cmd->add_option("--format", format, "csv, markdown, json or svg");
  table_cmd->add_flag("--probabilities", with_probabilities, "Add probability columns (markdown, json)");
  table_cmd->add_flag("--exact", exact, "Probabilities as reduced fractions");
  table_cmd->add_option("--digits", digits, "Significant digits for probabilities")->check(CLI::Range(1, 40));
  table_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::string cat_a;
  std::string cat_b;
  auto* crossover_cmd = app.add_subcommand("crossover", "Smallest n where category A outnumbers B");
  crossover_cmd->add_option("a", cat_a, "Category A")->required();
  crossover_cmd->add_option("b", cat_b, "Category B")->required();
  crossover_cmd->add_option("--from", from, "Smallest hand size (>= 5)");
  crossover_cmd->add_option("--to", to, "Largest hand size (<= 52)");

  bool slow = false;
  std::string g_table_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks; JSON report on stdout");
  verify_cmd->add_flag("--slow", slow, "Include exhaustive enumeration at n = 7");
  verify_cmd->add_option("--g-table", g_table_text, "Substitute g(0..13) values (comma separated)");

  std::string data_path;
  auto* plot_cmd = app.add_subcommand("plot", "SVG chart of the three probabilities over n = 5..52");
  plot_cmd->add_option("--out", out_path, "SVG output file (default stdout)");
  plot_cmd->add_option("--data", data_path, "Also write the probability series as CSV");

  int est_n = 0;
  std::string est_category;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  auto* estimate_cmd = app.add_subcommand("estimate", "Seeded Monte Carlo estimate for one category");
  estimate_cmd->add_option("n", est_n, "Hand size (0..52)")->required();
  estimate_cmd->add_option("category", est_category, "straight, flush or full_house")->required();
  estimate_cmd->add_option("--samples", samples, "Number of sampled hands")->check(CLI::PositiveNumber);
  estimate_cmd->add_option("--seed", seed, "Master seed (u64)");
  estimate_cmd->add_option("--workers", workers, "Independent sampling substreams")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) {
      const ncard::HandSize n(count_n);
      std::cout << "n " << n.value() << '\n';
      std::cout << "total " << ncard::total_hands(n) << '\n';
      for (ncard::Category c : ncard::kAllCategories) {
        const ncard::ExactCount k = ncard::count(c, n);
        std::cout << ncard::to_string(c) << ' ' << k << ' ' << render(ncard::probability(k, n), exact, digits)
                  << '\n';
      }
      return kExitOk;
    }

    if (*table_cmd) {
      const auto fmt = ncard::parse_format(format);
      if (!fmt) throw UsageError("unknown format '" + format + "'");
      const ncard::CountsTable table = ncard::build_table(from, to);
      ncard::EmitOptions options;
      options.probabilities = with_probabilities;
      options.exact_fractions = exact;
      options.significant_digits = digits;
      write_output(out_path, ncard::emit(table, *fmt, options));
      return kExitOk;
    }

    if (*crossover_cmd) {
      const ncard::Category a = category_arg(cat_a);
      const ncard::Category b = category_arg(cat_b);
      if (a == b) throw UsageError("crossover needs two distinct categories");
      const ncard::CrossoverReport r = ncard::find_crossover(a, b, from, to);
      std::cout << ncard::to_string(a) << " > " << ncard::to_string(b) << ": ";
      if (r.first_n) {
        std::cout << "first at n = " << *r.first_n;
      } else {
        std::cout << "none";
      }
      std::cout << " (scanned " << r.range_min << ".." << r.range_max << ")\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      ncard::VerifyOptions options;
      options.mode = slow ? ncard::VerifyMode::kSlow : ncard::VerifyMode::kFast;
      if (!g_table_text.empty()) options.g_table = parse_g_table(g_table_text);
      const ncard::VerificationReport report = ncard::verify(options);
      std::cout << report.to_json();
      for (const ncard::CheckResult& f : report.failures()) {
        std::cerr << "FAILED " << f.name << ": expected " << f.expected << ", got " << f.actual << '\n';
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*plot_cmd) {
      const ncard::CountsTable table = ncard::build_table();
      write_output(out_path, ncard::emit(table, ncard::Format::kSvg));
      if (!data_path.empty()) write_output(data_path, ncard::emit_plot_data(table));
      return kExitOk;
    }

    if (*estimate_cmd) {
      const ncard::HandSize n(est_n);
      const ncard::Category c = category_arg(est_category);
      const ncard::SampleEstimate est = ncard::monte_carlo(n, c, samples, seed, workers);
      const ncard::ExactProbability exact_p = ncard::probability(ncard::count(c, n), n);
      nlohmann::ordered_json doc;
      doc["n"] = n.value();
      doc["category"] = std::string(ncard::to_string(c));
      doc["rng"] = std::string(ncard::kRngAlgorithm);
      doc["seed"] = std::to_string(est.seed);
      doc["workers"] = est.workers;
      doc["samples"] = std::to_string(est.samples);
      doc["hits"] = std::to_string(est.hits);
      doc["point"] = est.point().decimal(digits);
      doc["stderr"] = est.standard_error();
      doc["exact"] = exact_p.decimal(digits);
      std::cout << doc.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
