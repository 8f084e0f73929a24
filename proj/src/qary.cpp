#include "necksum/qary.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "necksum/identities.hpp"
#include "necksum/parallel.hpp"

namespace necksum {

BoundedMultiset::BoundedMultiset(std::int64_t modulus, std::int64_t bound,
                                 std::vector<std::int64_t> multiplicities)
    : modulus_(modulus), bound_(bound), multiplicities_(std::move(multiplicities)) {
  require(modulus_ >= 1, errc::invalid_argument, "multiset modulus must be positive");
  require(bound_ >= 2, errc::invalid_argument, "multiplicity bound must be at least 2");
  require(static_cast<std::int64_t>(multiplicities_.size()) == modulus_, errc::invalid_argument,
          "multiplicity vector length must equal the modulus");
  size_ = 0;
  residue_ = 0;
  for (std::int64_t e = 1; e <= modulus_; ++e) {
    const std::int64_t m = multiplicities_[static_cast<std::size_t>(e - 1)];
    require(m >= 0 && m < bound_, errc::invalid_argument,
            "multiplicity must lie in [0, q-1]");
    size_ += m;
    residue_ = (residue_ + e % modulus_ * m) % modulus_;
  }
}

std::string BoundedMultiset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::int64_t e = 1; e <= modulus_; ++e) {
    for (std::int64_t c = 0; c < multiplicity(e); ++c) {
      if (!first) os << ',';
      os << e;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BoundedMultiset& m) { return os << m.str(); }

QaryWord::QaryWord(std::int64_t alphabet, std::vector<std::int64_t> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  require(alphabet_ >= 2, errc::invalid_argument, "alphabet size must be at least 2");
  require(!symbols_.empty(), errc::invalid_argument, "word must be non-empty");
  entry_sum_ = 0;
  for (std::int64_t s : symbols_) {
    require(s >= 0 && s < alphabet_, errc::invalid_argument, "symbol out of alphabet");
    entry_sum_ += s;
  }
}

std::string QaryWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (alphabet_ > 10 && i > 0) os << ',';
    os << symbols_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QaryWord& w) { return os << w.str(); }

std::int64_t qary_co_period(const QaryWord& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.length());
  for (std::int64_t len : divisors(n)) {
    bool periodic = true;
    for (std::int64_t i = len; i < n && periodic; ++i)
      periodic = w.symbols()[static_cast<std::size_t>(i)] ==
                 w.symbols()[static_cast<std::size_t>(i % len)];
    if (periodic) return n / len;
  }
  return 1;
}

std::vector<BoundedMultiset> enumerate_multisets(std::int64_t n, std::int64_t k, std::int64_t r,
                                                 std::int64_t q) {
  require(n >= 1, errc::invalid_argument, "enumerate_multisets: n must be positive");
  require(q >= 2, errc::invalid_argument, "enumerate_multisets: q must be at least 2");
  require(k >= 0, errc::invalid_argument, "enumerate_multisets: k must be non-negative");
  require(r >= 0 && r < n, errc::invalid_argument, "enumerate_multisets: needs 0 <= r < n");
  std::vector<BoundedMultiset> out;
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::int64_t e, std::int64_t size, std::int64_t sum) -> void {
    if (e > n) {
      if (size == k && sum == r) out.emplace_back(n, q, mult);
      return;
    }
    const std::int64_t later_capacity = (n - e) * (q - 1);
    for (std::int64_t m = 0; m < q; ++m) {
      if (size + m > k) break;
      if (size + m + later_capacity < k) continue;
      mult[static_cast<std::size_t>(e - 1)] = m;
      self(self, e + 1, size + m, (sum + e % n * m) % n);
    }
    mult[static_cast<std::size_t>(e - 1)] = 0;
  };
  rec(rec, 1, 0, 0);
  return out;
}

namespace {

// q-ary pre-necklace recursion; emits canonical representatives ascending
// with p the primitive prefix length. Entry-sum pruning optional via k >= 0.
template <typename Emit>
void generate_qary(std::int64_t n, std::int64_t q, std::int64_t k, Emit&& emit) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t sum = 0;
  const std::int64_t qm1 = q - 1;
  auto rec = [&](auto&& self, std::int64_t t, std::int64_t p) -> void {
    if (t > n) {
      if (n % p == 0 && (k < 0 || sum == k)) emit(a, n / p);
      return;
    }
    const std::int64_t start = a[static_cast<std::size_t>(t - p)];
    for (std::int64_t v = start; v < q; ++v) {
      a[static_cast<std::size_t>(t)] = v;
      sum += v;
      if (k < 0 || (sum <= k && sum + (n - t) * qm1 >= k))
        self(self, t + 1, v == start ? p : t);
      sum -= v;
    }
    a[static_cast<std::size_t>(t)] = 0;
  };
  rec(rec, 1, 1);
}

}  // namespace

std::vector<QaryWord> enumerate_qary_necklaces(std::int64_t n, std::int64_t k, std::int64_t r,
                                               std::int64_t q) {
  require(n >= 1, errc::invalid_argument, "enumerate_qary_necklaces: n must be positive");
  require(q >= 2, errc::invalid_argument, "enumerate_qary_necklaces: q must be at least 2");
  require(k >= 0 && k <= n * (q - 1), errc::invalid_argument,
          "enumerate_qary_necklaces: entry sum out of range");
  require(r >= 0 && r < n, errc::invalid_argument, "enumerate_qary_necklaces: needs 0 <= r < n");
  std::vector<QaryWord> out;
  generate_qary(n, q, k, [&](const std::vector<std::int64_t>& a, std::int64_t coperiod) {
    if (r % coperiod != 0) return;
    std::vector<std::int64_t> symbols(a.begin() + 1, a.end());
    out.emplace_back(q, std::move(symbols));
  });
  return out;
}

namespace {

struct QaryTally {
  // necklaces[k] maps co-period j (a divisor of n) to a count
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> necklaces;
  // multisets[k][r]
  std::vector<std::vector<std::int64_t>> multisets;
};

QaryTally tally_counts(std::int64_t n, std::int64_t q) {
  const std::int64_t k_cap = n * (q - 1);
  QaryTally tally;
  tally.necklaces.resize(static_cast<std::size_t>(k_cap) + 1);
  tally.multisets.assign(static_cast<std::size_t>(k_cap) + 1,
                         std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));

  generate_qary(n, q, -1, [&](const std::vector<std::int64_t>& a, std::int64_t coperiod) {
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= n; ++i) sum += a[static_cast<std::size_t>(i)];
    auto& row = tally.necklaces[static_cast<std::size_t>(sum)];
    for (auto& entry : row)
      if (entry.first == coperiod) {
        ++entry.second;
        return;
      }
    row.emplace_back(coperiod, 1);
  });

  // Odometer over multiplicity vectors.
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  std::int64_t size = 0, residue = 0;
  while (true) {
    ++tally.multisets[static_cast<std::size_t>(size)][static_cast<std::size_t>(residue)];
    std::size_t pos = 0;
    while (pos < mult.size()) {
      const std::int64_t e = static_cast<std::int64_t>(pos) + 1;
      if (mult[pos] + 1 < q) {
        ++mult[pos];
        ++size;
        residue = (residue + e) % n;
        break;
      }
      size -= mult[pos];
      residue = ((residue - e % n * mult[pos]) % n + n) % n;
      mult[pos] = 0;
      ++pos;
    }
    if (pos == mult.size()) break;
  }
  return tally;
}

}  // namespace

std::vector<ScanRow> scan_equality(std::int64_t n_max, std::int64_t q_max, std::int64_t k_max,
                                   int jobs) {
  require(n_max >= 2 && q_max >= 2, errc::invalid_argument, "scan_equality: bounds must be >= 2");
  require(k_max >= 0, errc::invalid_argument, "scan_equality: k_max must be non-negative");

  struct Cell {
    std::int64_t n, q;
  };
  std::vector<Cell> cells;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t q = 2; q <= q_max; ++q) cells.push_back({n, q});

  std::vector<std::vector<ScanRow>> buckets(cells.size());
  for_each_cell(cells.size(), jobs, [&](std::size_t idx) {
    const auto [n, q] = cells[idx];
    const QaryTally tally = tally_counts(n, q);
    const std::int64_t k_cap = std::min(k_max, n * (q - 1));
    auto& rows = buckets[idx];
    for (std::int64_t k = 0; k <= k_cap; ++k) {
      for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t necks = 0;
        for (const auto& [coperiod, count] : tally.necklaces[static_cast<std::size_t>(k)])
          if (r % coperiod == 0) necks += count;
        const std::int64_t multis =
            tally.multisets[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
        std::string conditions = equality_conditions(n, k, r);
        if (conditions.empty()) conditions = "-";
        rows.push_back(ScanRow{n, q, k, r, multis, necks, multis == necks, conditions});
      }
    }
  });

  std::vector<ScanRow> out;
  for (auto& bucket : buckets)
    for (auto& row : bucket) out.push_back(std::move(row));
  return out;
}

ChanReport chan_total_check(std::int64_t n, std::int64_t q) {
  require(n >= 1, errc::invalid_argument, "chan_total_check: n must be positive");
  require(q >= 2, errc::invalid_argument, "chan_total_check: q must be at least 2");
  require(std::gcd(n, q) == 1, errc::gcd_not_one, "chan_total_check: needs gcd(n, q) = 1");
  const QaryTally tally = tally_counts(n, q);
  std::int64_t multis = 0, necks = 0;
  for (std::size_t k = 0; k < tally.multisets.size(); ++k) {
    multis += tally.multisets[k][0];
    for (const auto& entry : tally.necklaces[k]) necks += entry.second;
  }
  return ChanReport{n, q, multis, necks, multis == necks};
}

}  // namespace necksum
