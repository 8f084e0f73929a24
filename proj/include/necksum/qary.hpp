#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "necksum/exact.hpp"

namespace necksum {

// Multiset of [n] where every element has multiplicity below q; size and
// element-sum residue are cached.
class BoundedMultiset {
 public:
  BoundedMultiset(std::int64_t modulus, std::int64_t bound,
                  std::vector<std::int64_t> multiplicities);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t bound() const { return bound_; }
  // multiplicity of element e in [1, n]
  std::int64_t multiplicity(std::int64_t e) const {
    return multiplicities_[static_cast<std::size_t>(e - 1)];
  }
  const std::vector<std::int64_t>& multiplicities() const { return multiplicities_; }
  std::int64_t size() const { return size_; }
  std::int64_t residue() const { return residue_; }

  // Elements with repetition, e.g. "{1,1,3}".
  std::string str() const;

  friend auto operator<=>(const BoundedMultiset& a, const BoundedMultiset& b) {
    return a.multiplicities_ <=> b.multiplicities_;
  }
  friend bool operator==(const BoundedMultiset& a, const BoundedMultiset& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const BoundedMultiset& m);

 private:
  std::int64_t modulus_, bound_;
  std::vector<std::int64_t> multiplicities_;
  std::int64_t size_, residue_;
};

// Word over {0,...,q-1}; the entry sum is a plain integer, not reduced.
class QaryWord {
 public:
  QaryWord(std::int64_t alphabet, std::vector<std::int64_t> symbols);

  std::int64_t alphabet() const { return alphabet_; }
  std::size_t length() const { return symbols_.size(); }
  const std::vector<std::int64_t>& symbols() const { return symbols_; }
  std::int64_t entry_sum() const { return entry_sum_; }

  std::string str() const;  // digits when q <= 10, comma separated otherwise

  friend auto operator<=>(const QaryWord& a, const QaryWord& b) {
    return a.symbols_ <=> b.symbols_;
  }
  friend bool operator==(const QaryWord& a, const QaryWord& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const QaryWord& w);

 private:
  std::int64_t alphabet_;
  std::vector<std::int64_t> symbols_;
  std::int64_t entry_sum_;
};

std::int64_t qary_co_period(const QaryWord& w);

// All size-k multisets of [n] with multiplicities below q summing to r mod n,
// ordered by multiplicity vector lexicographically.
std::vector<BoundedMultiset> enumerate_multisets(std::int64_t n, std::int64_t k, std::int64_t r,
                                                 std::int64_t q);

// Canonical representatives of q-ary necklaces of length n with entry sum k
// and co-period dividing r, ascending.
std::vector<QaryWord> enumerate_qary_necklaces(std::int64_t n, std::int64_t k, std::int64_t r,
                                               std::int64_t q);

// One cell of the equality evidence table. The conditions column carries the
// letters of the binary equality characterization evaluated at (n, k, r);
// no correctness claim is made outside q = 2.
struct ScanRow {
  std::int64_t n, q, k, r;
  std::int64_t count_multisets;
  std::int64_t count_necklaces;
  bool equal;
  std::string conditions;  // "-" when no condition letter applies
};

std::vector<ScanRow> scan_equality(std::int64_t n_max, std::int64_t q_max, std::int64_t k_max,
                                   int jobs = 1);

// Total-count comparison for coprime (n, q): multisets with sum divisible by
// n versus all q-ary necklaces of length n, both by enumeration.
struct ChanReport {
  std::int64_t n, q;
  std::int64_t total_multisets;
  std::int64_t total_necklaces;
  bool equal;
};
ChanReport chan_total_check(std::int64_t n, std::int64_t q);

}  // namespace necksum
