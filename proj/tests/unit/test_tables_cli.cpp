#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "pivotlab/cli.hpp"
#include "pivotlab/suites.hpp"
#include "pivotlab/tables.hpp"

using namespace pivotlab;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "pivotlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json first_line(const std::string& text) { return nlohmann::json::parse(text.substr(0, text.find('\n'))); }

// Mean number of flat {I,H}^n spectra over quadratic forms on labelled graphs:
// sum over |X| = m of the probability that a random symmetric zero-diagonal
// m x m matrix over GF(2) is nonsingular.
double quadratic_closed_form(int n) {
  double total = 0;
  for (int m = 0; m <= n; ++m) {
    double p = m % 2 ? 0.0 : 1.0;
    for (int i = 1; i <= m / 2; ++i) p *= 1.0 - std::pow(2.0, 1 - 2 * i);
    total += static_cast<double>(oracle::binomial(n, m)) * p;
  }
  return total;
}

double naive_random_average(int n) {
  const std::uint32_t size = 1U << n;
  std::uint64_t total = 0;
  for (std::uint64_t table = 0; table < (std::uint64_t{1} << size); ++table) {
    // Truth table to term list by the Moebius transform.
    std::vector<int> a(size);
    for (std::uint32_t x = 0; x < size; ++x) a[x] = (table >> x) & 1U;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t x = 0; x < size; ++x)
        if (x >> i & 1U) a[x] ^= a[x ^ (1U << i)];
    std::vector<std::uint32_t> terms;
    for (std::uint32_t x = 0; x < size; ++x)
      if (a[x]) terms.push_back(x);
    total += static_cast<std::uint64_t>(oracle::count_flat(terms, n, "IH"));
  }
  return static_cast<double>(total) / static_cast<double>(std::uint64_t{1} << size);
}

}  // namespace

TEST(Tables, RationalRounding) {
  EXPECT_EQ((Rational{711, 512}).decimal(3), "1.389");
  EXPECT_EQ((Rational{1, 8}).decimal(2), "0.13");
  EXPECT_EQ((Rational{5, 1}).decimal(0), "5");
  EXPECT_EQ((Rational{2, 3}).decimal(3), "0.667");
  EXPECT_EQ((Rational{999, 1000}).decimal(2), "1.00");
}

TEST(Tables, RandomAverageMatchesNaiveSweep) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_NEAR(average_flat_random(n).value(), naive_random_average(n), 1e-12) << "n=" << n;
  EXPECT_EQ(average_flat_random(4).num * 512, average_flat_random(4).den * 711);
}

TEST(Tables, QuadraticAverageMatchesClosedForm) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_NEAR(average_flat_quadratic(n).value(), quadratic_closed_form(n), 1e-12) << "n=" << n;
}

TEST(Tables, GoldenComparison) {
  const TableResult t3 = compute_table(3, 7);
  EXPECT_TRUE(t3.ok());
  ASSERT_EQ(t3.rows.size(), 7U);
  EXPECT_EQ(t3.rows[6].cells.front().column, "i_P");
  EXPECT_EQ(t3.rows[6].cells.front().display(), "134");
  EXPECT_EQ(table_golden(3, "i_P", 7), "134");
  EXPECT_EQ(table_columns(4), (std::vector<std::string>{"i_PB", "i_C", "i_C_iso"}));

  // The random column at n = 4 is 1.389 exactly; the printed value is 1.390.
  const TableResult t1 = compute_table(1, 4);
  EXPECT_FALSE(t1.ok());
  ASSERT_EQ(t1.mismatches.size(), 1U);
  EXPECT_TRUE(t1.inconsistencies.empty());
}

TEST(Tables, CeilingsAndSampling) {
  const TableResult beyond = compute_table(2, 9);
  ASSERT_EQ(beyond.rows.size(), 9U);
  EXPECT_FALSE(beyond.rows[8].skipped.empty());
  TableOptions sampled;
  sampled.min_n = 5;
  sampled.samples = 200;
  const TableResult t1 = compute_table(1, 5, sampled);
  bool found = false;
  for (const auto& cell : t1.rows.front().cells)
    if (cell.sampled) {
      found = true;
      EXPECT_TRUE(cell.matches);
      EXPECT_GT(cell.value.value(), 1.0);
    }
  EXPECT_TRUE(found);
}

TEST(Cli, SpectraCount) {
  const CliRun r = run({"spectra", "count", "--anf", "n=3; x0*x1+x0*x2+x1*x2", "--family", "IH"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(first_line(r.out)["count"], 4);
  const CliRun g = run({"spectra", "count", "--graph", "n=3;0 1;1 2", "--family", "IHN", "--method", "rank"});
  EXPECT_EQ(g.code, kExitOk);
  EXPECT_EQ(first_line(g.out)["count"], 16);
  const CliRun flat = run({"spectra", "flat", "--anf", "n=2; x0*x1", "--spec", "HI"});
  EXPECT_EQ(first_line(flat.out)["flat"], false);
}

TEST(Cli, PivotAndOrbit) {
  const CliRun p = run({"pivot", "--hex", "3:6,1,1", "--u", "0", "--v", "1"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(first_line(p.out)["result"], "3:2,5,2");
  const CliRun a = run({"pivot", "--anf", "n=3; x0*x1+x1*x2", "--u", "0", "--v", "1"});
  EXPECT_EQ(first_line(a.out)["result"], "n=3; x0*x1+x0*x2");
  const CliRun bad = run({"pivot", "--hex", "3:6,1,1", "--u", "1", "--v", "2"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"]["type"], "not-an-edge");
  const CliRun o = run({"orbit", "--hex", "4:e,1,1,1", "--labelled"});
  EXPECT_EQ(first_line(o.out)["labelled_size"], 4);
}

TEST(Cli, ClassifyWritesDatabase) {
  const auto path = std::filesystem::temp_directory_path() / "pivotlab_reps_test.txt";
  const CliRun r = run({"classify", "--n", "5", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(first_line(r.out)["count"], 10);
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  EXPECT_EQ(lines.size(), 10U);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  std::filesystem::remove(path);
}

TEST(Cli, Codes) {
  const auto path = std::filesystem::temp_directory_path() / "pivotlab_code_test.txt";
  std::ofstream(path) << "7 4\n1000110\n0100101\n0010011\n0001111\n";
  const CliRun r = run({"codes", "infosets", "--file", path.string(), "--brute"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(first_line(r.out)["information_sets"], 28);
  EXPECT_EQ(first_line(r.out)["brute_force"], 28);
  const CliRun c = run({"codes", "classify", "--n", "6"});
  EXPECT_EQ(first_line(c.out)["indecomposable"], 13);
  EXPECT_EQ(first_line(c.out)["isodual"], 3);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"spectra", "count"}).code, kExitUsage);
  EXPECT_EQ(run({"spectra", "count", "--anf", "n=2; x0*x0"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--n", "9"}).code, kExitBudget);
  EXPECT_EQ(run({"tables", "--table", "1", "--max-n", "4"}).code, kExitMismatch);
  EXPECT_EQ(run({"tables", "--table", "3", "--max-n", "6"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"codes", "infosets", "--file", "/nonexistent/code.txt"}).code, kExitFailure);
  const CliRun v = run({"verify", "--suite", "rank-criterion", "--n", "4"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(first_line(v.out)["pass"], true);
}

TEST(Suites, SmallRunsPass) {
  IdentitySuiteOptions small;
  small.exhaustive_max_n = 3;
  small.random_samples = 200;
  EXPECT_TRUE(transform_identity_suite(small).passed());
  EXPECT_TRUE(pivot_spectra_suite(200, 5, 4, 3).passed());
  EXPECT_TRUE(quadratic_pivot_suite(5).passed());
  EXPECT_TRUE(only_pivot_suite(200, 5, 3).passed());
  EXPECT_TRUE(clique_suite(6, 12).passed());
  EXPECT_TRUE(infoset_suite(6).passed());
}
