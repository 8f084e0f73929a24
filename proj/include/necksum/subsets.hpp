#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "necksum/exact.hpp"

namespace necksum {

// Subset of {1,...,n} with its element-sum residue mod n cached. The 0-based
// rendering (n printed as 0) is an I/O convention only.
class ResidueSubset {
 public:
  ResidueSubset(std::int64_t modulus, std::vector<std::int64_t> elements);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  std::int64_t residue() const { return residue_; }

  std::string str(bool zero_based = false) const;

  friend auto operator<=>(const ResidueSubset& a, const ResidueSubset& b) {
    return a.elements_ <=> b.elements_;
  }
  friend bool operator==(const ResidueSubset& a, const ResidueSubset& b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ResidueSubset& s);

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> elements_;
  std::int64_t residue_;
};

// Full universe is {1,...,n}; Short drops n and matches subsets of [n-1].
enum class Universe { Full, Short };

// All k-subsets of the chosen universe whose sum is r mod n, in lexicographic
// order of their element sequences.
std::vector<ResidueSubset> enumerate_subsets(std::int64_t n, std::int64_t k, std::int64_t r,
                                             Universe universe);

// |Sbar_r(n,k)|: k-subsets of [n] with sum r mod n, by the closed formula
// (1/n) sum_{d | gcd(n,k)} C(n/d,k/d) c_d(r) (-1)^(k/d + k).
ExactInt count_sbar(std::int64_t n, std::int64_t k, std::int64_t r);

// |S_r(n,k)|: k-subsets of [n-1] with sum r mod n, via the alternating sum
// over count_sbar.
ExactInt count_s_short(std::int64_t n, std::int64_t k, std::int64_t r);

// Second counting oracle: dynamic programming over elements, usable far past
// enumeration range.
ExactInt count_subsets_dp(std::int64_t n, std::int64_t k, std::int64_t r, Universe universe);

// sum_k |Sbar_r(n,k)| x^k = (1/n) sum_{d|n} (1 - (-x)^d)^(n/d) c_d(r).
IntPolynomial sbar_generating_poly(std::int64_t n, std::int64_t r);

// sum_k |S_1(n,k-1)| x^(k-1) = (1/(n(1+x))) sum_{d|n} mu(d) (1 - (-x)^d)^(n/d).
IntPolynomial s1_short_poly(std::int64_t n);

// Witness for n x + k y + r z = 1 with gcd(z, n) = 1.
struct BezoutTriple {
  std::int64_t x, y, z;
  std::int64_t n, k, r;
};

// Extended gcd followed by scanning (x, y - r j, z + k j) for j = 0, 1, ...
// until gcd(z + k j, n) = 1. Requires gcd(n, k, r) = 1.
BezoutTriple bezout_solve(std::int64_t n, std::int64_t k, std::int64_t r);

// Elementwise a -> (z a + y) mod n with residue 0 written as n. Requires
// gcd(z, n) = 1; maps Sbar_r(n,k) onto Sbar_1(n,k) when (x,y,z) solves the
// Bezout equation for (n,k,r).
ResidueSubset affine_bijection(const ResidueSubset& a, std::int64_t y, std::int64_t z);

}  // namespace necksum
