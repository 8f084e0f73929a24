#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "necksum/exact.hpp"

namespace necksum {

// Permutation of [n] in one-line form; values are 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int n);
  // Accepts "54213" (digits, n <= 9) or comma/space separated values.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(oneline_.size()); }
  // sigma(position), 1-based.
  int at(int position) const { return oneline_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& oneline() const { return oneline_; }

  // Cycles partition [n]; each starts at its smallest element, cycles ordered
  // by those starting points.
  std::vector<std::vector<int>> cycles() const;

  std::string oneline_str() const;   // "54213" or "10 9 8 ..." past n = 9
  std::string cycle_str() const;     // "(1,5,3,2,4)"

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.oneline_ <=> b.oneline_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

 private:
  std::vector<int> oneline_;
};

// Position of the unique minimum when the one-line form strictly decreases to
// it and strictly increases afterwards; nullopt otherwise.
std::optional<int> is_v_shaped(const Permutation& p);

// Single cycle of full length.
bool is_cyclic(const Permutation& p);

// sigma -> (n+1-sigma_n) ... (n+1-sigma_1); swaps V-shaped and unimodal while
// preserving the cycle structure.
Permutation reverse_complement(const Permutation& p);

// Cyclic V-shaped permutations of [n] with minimum at position k, in
// lexicographic one-line order. Candidates are built from the C(n-1,k-1)
// choices of descending-prefix values and filtered by cyclicity.
std::vector<Permutation> enumerate_cvp(std::int64_t n, std::int64_t k);

// sum_k |CVP(n,k)| x^(k-1) = (1/(n(1+x))) sum_{d|n} mu(d) (1 - (-x)^d)^(n/d).
IntPolynomial thibon_poly(std::int64_t n);

// |CVP(n,k)| as the alternating sum of |L+(n,i)| over i < k. k = 0 and
// k = n+1 return 0 by convention.
ExactInt count_cvp(std::int64_t n, std::int64_t k);

// |CVP(n,k)| + |CVP(n,k+1)| for 0 <= k <= n; equals count_lplus(n,k).
ExactInt count_cvp_pair(std::int64_t n, std::int64_t k);

}  // namespace necksum
