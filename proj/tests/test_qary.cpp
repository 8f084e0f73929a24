#include "necksum/qary.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

#include "necksum/identities.hpp"
#include "necksum/subsets.hpp"
#include "necksum/words.hpp"

using namespace necksum;

namespace {

// Brute-force canonical check over all q^n words.
std::set<std::string> qary_classes(std::int64_t n, std::int64_t q, std::int64_t k,
                                   std::int64_t r) {
  std::set<std::string> classes;
  std::vector<std::int64_t> word(static_cast<std::size_t>(n), 0);
  while (true) {
    std::int64_t sum = std::accumulate(word.begin(), word.end(), std::int64_t{0});
    if (sum == k) {
      QaryWord w(q, word);
      if (r % qary_co_period(w) == 0) {
        std::string best = w.str();
        for (std::size_t j = 1; j < word.size(); ++j) {
          std::vector<std::int64_t> rot;
          for (std::size_t i = 0; i < word.size(); ++i)
            rot.push_back(word[(j + i) % word.size()]);
          best = std::min(best, QaryWord(q, rot).str());
        }
        classes.insert(best);
      }
    }
    std::size_t pos = 0;
    while (pos < word.size() && word[pos] == q - 1) word[pos++] = 0;
    if (pos == word.size()) break;
    ++word[pos];
  }
  return classes;
}

}  // namespace

TEST_SUITE("qary") {

TEST_CASE("bounded multiset basics") {
  BoundedMultiset m(3, 2, {1, 1, 0});
  CHECK(m.size() == 2);
  CHECK(m.residue() == 0);
  CHECK(m.str() == "{1,2}");
  CHECK_THROWS_AS(BoundedMultiset(3, 2, {2, 0, 0}), Error);
  CHECK_THROWS_AS(BoundedMultiset(3, 2, {1, 1}), Error);
}

TEST_CASE("enumerate multisets, pinned examples") {
  const auto pair_sets = enumerate_multisets(2, 2, 0, 3);
  REQUIRE(pair_sets.size() == 2);
  // multiplicity-vector order puts {2,2} = (0,2) before {1,1} = (2,0)
  CHECK(pair_sets[0].str() == "{2,2}");
  CHECK(pair_sets[1].str() == "{1,1}");

  const auto empty_only = enumerate_multisets(5, 0, 0, 4);
  REQUIRE(empty_only.size() == 1);
  CHECK(empty_only[0].size() == 0);

  const auto distinct = enumerate_multisets(3, 2, 0, 2);
  REQUIRE(distinct.size() == 1);
  CHECK(distinct[0].str() == "{1,2}");
}

TEST_CASE("enumerate qary necklaces, pinned examples") {
  const auto sum_two = enumerate_qary_necklaces(2, 2, 0, 3);
  REQUIRE(sum_two.size() == 2);
  CHECK(sum_two[0].str() == "02");
  CHECK(sum_two[1].str() == "11");

  const auto zeros = enumerate_qary_necklaces(4, 0, 0, 3);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0].str() == "0000");

  const auto primitive = enumerate_qary_necklaces(2, 2, 1, 3);
  REQUIRE(primitive.size() == 1);
  CHECK(primitive[0].str() == "02");
}

TEST_CASE("qary necklace enumeration matches the rotation-class scan") {
  for (std::int64_t q = 2; q <= 4; ++q) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t k = 0; k <= n * (q - 1); ++k) {
        for (std::int64_t r = 0; r < n; ++r) {
          const auto fast = enumerate_qary_necklaces(n, k, r, q);
          std::set<std::string> got;
          for (const auto& w : fast) {
            CHECK(w.entry_sum() == k);
            CHECK(r % qary_co_period(w) == 0);
            got.insert(w.str());
          }
          CHECK(got.size() == fast.size());
          CHECK(got == qary_classes(n, q, k, r));
        }
      }
    }
  }
}

TEST_CASE("binary slice agrees with the words and subsets modules") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      for (std::int64_t r = 0; r < n; ++r) {
        const auto words = enumerate_qary_necklaces(n, k, r, 2);
        const auto reference = enumerate_coperiod_div(n, k, r);
        REQUIRE(words.size() == reference.size());
        for (std::size_t i = 0; i < words.size(); ++i)
          CHECK(words[i].str() == reference[i].str());
        CHECK(enumerate_multisets(n, k, r, 2).size() ==
              enumerate_subsets(n, k, r, Universe::Full).size());
      }
    }
  }
}

TEST_CASE("scanner slice at q = 2 matches the equality conditions") {
  const auto rows = scan_equality(8, 2, 16);
  CHECK(!rows.empty());
  for (const auto& row : rows) {
    REQUIRE(row.q == 2);
    CHECK(row.count_multisets == count_sbar(row.n, row.k, row.r));
    CHECK(row.count_necklaces == count_coperiod_div(row.n, row.k, row.r));
    const bool predicted = !equality_conditions(row.n, row.k, row.r).empty();
    CHECK(row.equal == predicted);
    CHECK(row.conditions == (predicted ? equality_conditions(row.n, row.k, row.r)
                                       : std::string("-")));
  }
}

TEST_CASE("scanner covers coprime residue-zero equality") {
  for (const auto& row : scan_equality(6, 4, 24)) {
    if (row.r == 0 && std::gcd(row.q, row.n) == 1) CHECK(row.equal);
  }
}

TEST_CASE("chan totals, pinned examples") {
  const ChanReport binary = chan_total_check(3, 2);
  CHECK(binary.total_multisets == 4);
  CHECK(binary.total_necklaces == 4);
  CHECK(binary.equal);

  const ChanReport ternary = chan_total_check(2, 3);
  CHECK(ternary.total_multisets == 6);
  CHECK(ternary.total_necklaces == 6);
  CHECK(ternary.equal);

  CHECK(chan_total_check(5, 2).equal);
  CHECK_THROWS_AS(chan_total_check(4, 2), Error);
}

TEST_CASE("chan totals over all coprime pairs up to the desk bound") {
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t q = 2; n * q <= 40; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CHECK(chan_total_check(n, q).equal);
    }
}

}  // TEST_SUITE
