#include "ncard/verify.hpp"

#include <sstream>

#include <json.hpp>

#include "ncard/hand_counters.hpp"
#include "ncard/oracle.hpp"
#include "ncard/report.hpp"

namespace ncard {
namespace {

std::string join(const GTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) out += ',';
    out += t[i].to_string();
  }
  return out;
}

std::string crossover_text(const std::optional<int>& n) { return n ? std::to_string(*n) : "none"; }

class Checks {
 public:
  void add(std::string name, bool passed, std::string expected, std::string actual) {
    checks_.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
  }
  void equal(std::string name, ExactCount expected, ExactCount actual) {
    add(std::move(name), expected == actual, expected.to_string(), actual.to_string());
  }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace

bool VerificationReport::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::vector<CheckResult> VerificationReport::failures() const {
  std::vector<CheckResult> out;
  for (const CheckResult& c : checks) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["mode"] = mode == VerifyMode::kSlow ? "slow" : "fast";
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    doc["checks"].push_back(std::move(j));
  }
  return doc.dump(2) + '\n';
}

VerificationReport verify(const VerifyOptions& options) {
  Checks checks;
  const GTable& gt = options.g_table;

  const GTable brute = g_bruteforce_table();
  checks.add("g_table_matches_bruteforce", check_g_table(gt).empty(), join(brute), join(gt));

  ExactCount straight_subsets;
  for (unsigned bits = 0; bits <= RankSet::kAllRanks; ++bits) {
    if (contains_straight_ranks(RankSet::from_bits(static_cast<std::uint16_t>(bits)))) {
      straight_subsets += ExactCount(1);
    }
  }
  ExactCount table_sum;
  for (ExactCount v : gt) table_sum += v;
  checks.equal("g_table_sum_matches_subset_count", straight_subsets, table_sum);

  const int max_enumerated = options.mode == VerifyMode::kSlow ? 7 : 6;
  for (int n = 5; n <= max_enumerated; ++n) {
    const EnumerationCounts e = enumerate_counts(CardSet::full_deck(), n);
    const HandSize hs(n);
    const std::string suffix = "_n" + std::to_string(n);
    checks.equal("oracle_straight" + suffix, ExactCount(e.straight), count_straight(hs, gt));
    checks.equal("oracle_flush" + suffix, ExactCount(e.flush), count_flush(hs));
    checks.equal("oracle_full_house" + suffix, ExactCount(e.full_house), count_full_house(hs));
  }

  CountsTable table;
  for (int n = kTableMinN; n <= kTableMaxN; ++n) {
    const HandSize hs(n);
    table.rows.push_back({n, total_hands(hs), count_straight(hs, gt), count_flush(hs), count_full_house(hs)});
  }

  // Certainty thresholds: equality with the total holds exactly from the
  // threshold on.
  const auto threshold = [&](Category c) -> std::optional<int> {
    std::optional<int> first;
    for (auto it = table.rows.rbegin(); it != table.rows.rend() && it->of(c) == it->total; ++it) first = it->n;
    return first;
  };
  checks.add("flush_certain_from_17", threshold(Category::kFlush) == 17, "17",
             crossover_text(threshold(Category::kFlush)));
  checks.add("full_house_certain_from_27", threshold(Category::kFullHouse) == 27, "27",
             crossover_text(threshold(Category::kFullHouse)));
  checks.add("straight_certain_from_45", threshold(Category::kStraight) == 45, "45",
             crossover_text(threshold(Category::kStraight)));
  checks.equal("straight_44_misses_one_hand", table.row(44).total - ExactCount(1), table.row(44).straight);

  bool dominance = true;
  std::string dominance_actual = "holds";
  for (const TableRow& r : table.rows) {
    if (r.flush < r.full_house) {
      dominance = false;
      dominance_actual = "fails at n=" + std::to_string(r.n);
      break;
    }
  }
  checks.add("flush_dominates_full_house", dominance, "holds", dominance_actual);

  for (Category c : kAllCategories) {
    bool monotone = true;
    std::string actual = "nondecreasing";
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      const TableRow& prev = table.rows[i - 1];
      const TableRow& cur = table.rows[i];
      // p(n-1) <= p(n)  <=>  c(n-1) * T(n) <= c(n) * T(n-1)
      if (prev.of(c) * cur.total > cur.of(c) * prev.total) {
        monotone = false;
        actual = "decreases at n=" + std::to_string(cur.n);
        break;
      }
    }
    checks.add("monotone_probability_" + std::string(to_string(c)), monotone, "nondecreasing", actual);
  }

  const auto fs = find_crossover(table, Category::kFlush, Category::kStraight).first_n;
  const auto hs = find_crossover(table, Category::kFullHouse, Category::kStraight).first_n;
  const auto hf = find_crossover(table, Category::kFullHouse, Category::kFlush).first_n;
  checks.add("crossover_flush_over_straight", fs == 12, "12", crossover_text(fs));
  checks.add("crossover_full_house_over_straight", hs == 20, "20", crossover_text(hs));
  checks.add("crossover_full_house_over_flush", !hf.has_value(), "none", crossover_text(hf));

  return {options.mode, checks.take()};
}

}  // namespace ncard
