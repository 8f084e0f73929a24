// Times the cell-parallel kernels against their serial reference paths and
// checks both produce identical output. Sizes are larger than the shipped
// tables so the parallel speedup is visible.

#include <chrono>
#include <cstdio>
#include <string>

#include "necksum/identities.hpp"
#include "necksum/parallel.hpp"
#include "necksum/qary.hpp"
#include "necksum/textio.hpp"

using namespace necksum;

namespace {

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void line(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %7.3fs   parallel %7.3fs   speedup %5.2fx   %s\n", name, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t scale = 1;
  if (argc > 1) scale = std::max<std::int64_t>(1, std::atoll(argv[1]));
  std::printf("threads available: %d\n", hardware_jobs());

  {
    DiffGrid a, b;
    const std::int64_t m_max = 200 * scale;
    const double serial = time_seconds([&] { a = table_diff_grid(2, m_max, 1); });
    const double parallel = time_seconds([&] { b = table_diff_grid(2, m_max, 0); });
    line("difference grid", serial, parallel, a.rows == b.rows);
  }
  {
    DiffSumTable a, b;
    const std::int64_t n_max = 400 * scale;
    const double serial = time_seconds([&] { a = table_diff_sum(n_max, 1); });
    const double parallel = time_seconds([&] { b = table_diff_sum(n_max, 0); });
    line("aggregate difference table", serial, parallel, a.rows == b.rows);
  }
  {
    SweepReport a, b;
    const std::int64_t max_n = 96 * scale;
    const double serial = time_seconds([&] { a = verify_equality_sweep(max_n, false, 1); });
    const double parallel = time_seconds([&] { b = verify_equality_sweep(max_n, false, 0); });
    line("equality sweep", serial, parallel,
         a.ok() == b.ok() && a.cells_checked == b.cells_checked);
  }
  {
    std::string a, b;
    const std::int64_t n_max = 11, q_max = 3 + scale;
    const double serial =
        time_seconds([&] { a = render_scan_rows(scan_equality(n_max, q_max, 1 << 20, 1),
                                                OutputFormat::csv); });
    const double parallel =
        time_seconds([&] { b = render_scan_rows(scan_equality(n_max, q_max, 1 << 20, 0),
                                                OutputFormat::csv); });
    line("q-ary scanner", serial, parallel, a == b);
  }
  return 0;
}
