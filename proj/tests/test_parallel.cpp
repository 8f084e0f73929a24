#include "necksum/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <numeric>

#include "necksum/identities.hpp"
#include "necksum/qary.hpp"
#include "necksum/textio.hpp"

using namespace necksum;

TEST_SUITE("parallel") {

TEST_CASE("for_each_cell covers every index once") {
  for (int jobs : {1, 0, 4}) {
    std::vector<std::atomic<int>> hits(257);
    for (auto& h : hits) h = 0;
    for_each_cell(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) CHECK(h == 1);
  }
}

TEST_CASE("exceptions from cells propagate") {
  CHECK_THROWS_AS(
      for_each_cell(64, 0, [](std::size_t i) {
        if (i == 13) fail(errc::invalid_argument, "boom");
      }),
      Error);
}

TEST_CASE("grid kernels match the serial reference bit for bit") {
  const DiffGrid serial = table_diff_grid(2, 24, 1);
  const DiffGrid parallel = table_diff_grid(2, 24, 0);
  CHECK(serial.rows == parallel.rows);
  CHECK(render_diff_grid(serial, OutputFormat::csv) ==
        render_diff_grid(parallel, OutputFormat::csv));

  const DiffSumTable sum_serial = table_diff_sum(24, 1);
  const DiffSumTable sum_parallel = table_diff_sum(24, 3);
  CHECK(sum_serial.rows == sum_parallel.rows);
  CHECK(render_diff_sum(sum_serial, OutputFormat::json) ==
        render_diff_sum(sum_parallel, OutputFormat::json));
}

TEST_CASE("sweep kernel matches the serial reference") {
  const SweepReport serial = verify_equality_sweep(12, false, 1);
  const SweepReport parallel = verify_equality_sweep(12, false, 0);
  CHECK(serial.ok());
  CHECK(parallel.ok());
  CHECK(serial.cells_checked == parallel.cells_checked);
}

TEST_CASE("scanner kernel matches the serial reference") {
  const auto serial = scan_equality(6, 3, 12, 1);
  const auto parallel = scan_equality(6, 3, 12, 0);
  CHECK(render_scan_rows(serial, OutputFormat::csv) ==
        render_scan_rows(parallel, OutputFormat::csv));
}

}  // TEST_SUITE
