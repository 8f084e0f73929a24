#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "necksum/exact.hpp"

namespace necksum {

// Outcome of the equality characterization for |N_r(n,k)| vs |Sbar_r(n,k)|.
// Equality holds exactly when at least one of the conditions matches:
//   a: n odd
//   b: k odd
//   c: nu2(n) < nu2(k)            (k = 0 included via nu2(0) infinite)
//   d: nu2(k) - nu2(r) >= 2
//   e: k = n is even and r not in {0, n/2}
// Otherwise the difference is +-|N_r(n', k')| with n' = n / 2^nu2(k),
// k' = k / 2^nu2(k), negative precisely when nu2(k) - nu2(r) = 1.
struct EqualityVerdict {
  std::int64_t n, k, r;
  bool predicted_equal;
  std::string matched_conditions;  // subset of "abcde"
  ExactInt predicted_difference;
  int sign;  // 0 when equal, else +1 or -1
};

EqualityVerdict predict_equality(std::int64_t n, std::int64_t k, std::int64_t r);

// Which of conditions a-e hold; also usable when k exceeds n (the q-ary
// scanner probes the analogues verbatim).
std::string equality_conditions(std::int64_t n, std::int64_t k, std::int64_t r);

// |N_r(n,k)| - |Sbar_r(n,k)| straight from the two closed-form counts.
ExactInt difference(std::int64_t n, std::int64_t k, std::int64_t r);

// |N_r(n)| - |Sbar_r(n)| = (1/n) sum over even d | n of 2^(n/d) c_d(r).
ExactInt aggregate_difference(std::int64_t n, std::int64_t r);

// Grid of difference(2m, 2k, r) for 1 <= m <= m_max, 0 <= k <= m.
struct DiffGrid {
  std::int64_t r = 0;
  std::int64_t m_max = 0;
  std::vector<std::vector<ExactInt>> rows;  // rows[m-1] holds k = 0..m
};
DiffGrid table_diff_grid(std::int64_t r, std::int64_t m_max, int jobs = 1);

// Rows of aggregate_difference(n, r mod n) for 1 <= n <= n_max, 0 <= r <= n;
// the r = n column repeats r = 0.
struct DiffSumTable {
  std::int64_t n_max = 0;
  std::vector<std::vector<ExactInt>> rows;  // rows[n-1] holds r = 0..n
};
DiffSumTable table_diff_sum(std::int64_t n_max, int jobs = 1);

// difference(2m, 6, 2) for m in [m_from, m_to]; each value is checked against
// count_coperiod_div(m, 3, 2) and count_lyndon(m, 3).
struct SequenceCheck {
  std::int64_t m_from = 0, m_to = 0;
  std::vector<ExactInt> values;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
SequenceCheck sequence_a001840_check(std::int64_t m_from, std::int64_t m_to);

// Exhaustive special-case checks for all n <= n_max, 0 <= k <= n:
//  - r = 0: equality with |N(n,k)| exactly under the stated conditions, and
//    the halved-difference value otherwise (|S0+(n,k)| = |N(n,k)| rephrasing);
//  - r = 1: |Sbar_1(n,k)| = |L+(n,k)| always, with the stated equality-to-
//    |L(n,k)| conditions and the -|L(n/2,k/2)| defect otherwise.
struct CorollaryReport {
  std::int64_t n_max = 0;
  std::int64_t cells_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
CorollaryReport corollary_reports(std::int64_t n_max);

// Formula-level sweep: predicted difference vs direct difference for every
// (n, k, r) with n <= max_n. With deep set, also recomputes both counts by
// brute-force enumeration for n <= min(max_n, 12).
struct SweepReport {
  std::int64_t max_n = 0;
  bool deep = false;
  std::int64_t cells_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
SweepReport verify_equality_sweep(std::int64_t max_n, bool deep, int jobs = 1);

}  // namespace necksum
