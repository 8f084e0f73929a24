#include "necksum/identities.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "necksum/subsets.hpp"
#include "necksum/textio.hpp"
#include "necksum/words.hpp"

using namespace necksum;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The ctest working directory is the build tree; goldens live in the source
// tree next to it.
std::string golden_path(const std::string& name) {
  return std::string(NECKSUM_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("equality verdicts, pinned cases") {
  const EqualityVerdict e1 = predict_equality(6, 6, 2);
  CHECK(e1.predicted_equal);
  CHECK(e1.matched_conditions == "e");
  CHECK(e1.predicted_difference == 0);
  CHECK(e1.sign == 0);

  const EqualityVerdict e2 = predict_equality(16, 12, 2);
  CHECK_FALSE(e2.predicted_equal);
  CHECK(e2.matched_conditions.empty());
  CHECK(e2.sign == -1);
  CHECK(e2.predicted_difference == -1);

  const EqualityVerdict e3 = predict_equality(7, 4, 2);
  CHECK(e3.predicted_equal);
  CHECK(e3.matched_conditions.find('a') != std::string::npos);

  // k = 0 falls under the valuation condition via nu2(0) infinite
  CHECK(predict_equality(8, 0, 3).matched_conditions.find('c') != std::string::npos);
  // r = 0 with even n, k and nu2(n) >= nu2(k) > 0 stays unequal with sign +1
  const EqualityVerdict e4 = predict_equality(4, 4, 0);
  CHECK_FALSE(e4.predicted_equal);
  CHECK(e4.sign == 1);
  CHECK(e4.predicted_difference == 1);
}

TEST_CASE("difference, pinned values") {
  CHECK(difference(16, 6, 2) == 7);
  CHECK(difference(4, 2, 2) == 1);
  CHECK(difference(6, 6, 2) == 0);
  CHECK(difference(9, 4, 2) == 0);
  CHECK(difference(15, 6, 3) == 0);
}

TEST_CASE("aggregate difference, pinned values") {
  CHECK(aggregate_difference(8, 1) == -2);
  CHECK(aggregate_difference(8, 0) == 4);
  for (std::int64_t r = 0; r < 9; ++r) CHECK(aggregate_difference(9, r) == 0);
}

TEST_CASE("aggregate difference equals the sum over k") {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (std::int64_t r = 0; r < n; ++r) {
      ExactInt sum = 0;
      for (std::int64_t k = 0; k <= n; ++k) sum += difference(n, k, r);
      CHECK(aggregate_difference(n, r) == sum);
    }
  }
}

TEST_CASE("formula sweep is clean and deep sweep matches enumeration") {
  const SweepReport fast = verify_equality_sweep(16, false);
  CHECK(fast.ok());
  CHECK(fast.cells_checked == 1632);  // sum of n(n+1) for n <= 16
  const SweepReport deep = verify_equality_sweep(10, true);
  CHECK(deep.ok());
}

TEST_CASE("grid rows, pinned against the transcription") {
  const DiffGrid grid = table_diff_grid(2, 19);
  auto row = [&](std::size_t m) { return grid.rows[m - 1]; };
  CHECK(row(1) == std::vector<ExactInt>{0, 1});
  CHECK(row(3) == std::vector<ExactInt>{0, 1, 0, 0});
  CHECK(row(10) ==
        std::vector<ExactInt>{0, 1, -1, 12, 0, 25, -2, 12, 0, 1, 0});
}

TEST_CASE("table renderings match the golden transcriptions") {
  const DiffGrid grid = table_diff_grid(2, 19);
  CHECK(render_diff_grid(grid, OutputFormat::csv) ==
        read_file(golden_path("table1_diff_grid_r2.csv")));
  const DiffSumTable table = table_diff_sum(20);
  CHECK(render_diff_sum(table, OutputFormat::csv) ==
        read_file(golden_path("table2_diff_sum.csv")));
}

TEST_CASE("diff-sum rows, pinned") {
  const DiffSumTable table = table_diff_sum(20);
  CHECK(table.rows[13] == std::vector<ExactInt>{10, -9, 9, -9, 9, -9, 9, -10, 9, -9, 9, -9, 9,
                                                -9, 10});
  CHECK(table.rows[19][0] == 56);
  CHECK(table.rows[19][20] == 56);  // r = n column repeats r = 0
  for (std::size_t r = 0; r <= 19; ++r) CHECK(table.rows[18][r] == 0);
}

TEST_CASE("diff-sum symmetry and distinct value bound") {
  const DiffSumTable table = table_diff_sum(20);
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto& row = table.rows[static_cast<std::size_t>(n - 1)];
    for (std::int64_t r = 1; r < n; ++r)
      CHECK(row[static_cast<std::size_t>(r)] == row[static_cast<std::size_t>(n - r)]);
    std::set<ExactInt> distinct(row.begin(), row.end());
    CHECK(distinct.size() <= divisors(n).size());
  }
}

TEST_CASE("three-ones subsequence check") {
  const SequenceCheck check = sequence_a001840_check(4, 12);
  CHECK(check.ok());
  CHECK(check.values ==
        std::vector<ExactInt>{1, 2, 3, 5, 7, 9, 12, 15, 18});
  CHECK(difference(6, 6, 2) == 0);  // the m = 3 boundary is an equality case
  CHECK_THROWS_AS(sequence_a001840_check(3, 12), Error);
}

TEST_CASE("special-case corollaries hold exhaustively") {
  const CorollaryReport report = corollary_reports(12);
  CHECK(report.ok());
  CHECK(report.cells_checked == 12 * 13 / 2 + 12);  // sum of (n+1) for n <= 12
  // |Sbar_1(6,2)| = 3 = |L+(6,2)|
  CHECK(count_sbar(6, 2, 1) == 3);
  CHECK(count_sbar(6, 2, 1) == count_lplus(6, 2));
  // k = n = 2 is the excluded boundary of the r=1 equality conditions
  CHECK(count_sbar(2, 2, 1) == 1);
  CHECK(count_lyndon(1, 1) == 1);
  CHECK(count_sbar(2, 2, 1) == count_lplus(2, 2));
  CHECK(count_lplus(2, 2) == count_lyndon(2, 2) + count_lyndon(1, 1));
}

TEST_CASE("r reduces modulo n") {
  CHECK(difference(6, 4, 8) == difference(6, 4, 2));
  CHECK(aggregate_difference(6, 6) == aggregate_difference(6, 0));
  CHECK(predict_equality(6, 4, 8).matched_conditions ==
        predict_equality(6, 4, 2).matched_conditions);
}

}  // TEST_SUITE
