#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "necksum/perms.hpp"
#include "necksum/words.hpp"

namespace necksum {

// One row of the inverse construction: the j-th cyclic shift, its
// partial-sum word, and the rank it received (1 = lexicographically largest
// partial-sum word).
struct RankedShift {
  int index;               // shift start, 1-based
  BinaryWord shifted;
  BinaryWord partial_sum;  // running prefix parities of the shifted word
  int rank;
};

struct PsiResult {
  Necklace image;
  BinaryWord cycle_word;  // bits [a_i <= k] along the cycle starting at 1
  bool halved;            // true when the cycle word was (vv) and v returned
};

// Maps a cyclic permutation with sigma_1 > ... > sigma_k and
// sigma_{k+1} < ... < sigma_n to a Lyndon class: write the cycle
// (a_1,...,a_n), send a_i to [a_i <= k], and halve the word when its
// co-period is 2.
PsiResult psi_detailed(const Permutation& p, int k);
Necklace psi(const Permutation& p, int k);

struct PsiInverseResult {
  Permutation perm;
  std::vector<RankedShift> table;
};

// Inverse construction: rank the cyclic shifts of w (or of ww in the halved
// case) by their partial-sum words, largest first, and read the ranks as a
// cycle. Ties between shifts j and j+n/2 propagate: the pair order at j+1
// matches the pair order at j when w_j = 0 and reverses when w_j = 1; the
// anchor orientation is resolved by validating both candidates.
PsiInverseResult psi_inverse_detailed(const BinaryWord& w, int n, int k);
Permutation psi_inverse(const BinaryWord& w, int n, int k);

struct PartitionReport {
  int n = 0;
  std::size_t odd_domain = 0, odd_image = 0;
  std::size_t even_domain = 0, even_image = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Applies the map over all cyclic V-shaped permutations of [n] twice, once
// with odd thresholds and once with even ones, and checks the images are
// exactly the primitive classes with odd weight, respectively the augmented
// even-weight classes, hit bijectively.
PartitionReport corollary_partition_check(int n);

// Exhaustive forward/backward verification for every n <= max_n and every
// threshold: round trips on both sides, image equal to the augmented Lyndon
// classes, and the two worked reference pairs. Includes the partition check.
struct BijectionSuiteReport {
  int max_n = 0;
  std::int64_t permutations_checked = 0;
  std::int64_t words_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
BijectionSuiteReport verify_bijection_suite(int max_n);

}  // namespace necksum
