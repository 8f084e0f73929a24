#include "necksum/words.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace necksum;

namespace {

std::set<std::string> as_strings(const std::vector<Necklace>& list) {
  std::set<std::string> out;
  for (const auto& n : list) out.insert(n.str());
  return out;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("canonical form") {
  CHECK(canonical_form(BinaryWord::from_string("10110")).str() == "01011");
  CHECK(canonical_form(BinaryWord::from_string("0000")).str() == "0000");
  CHECK(canonical_form(BinaryWord::from_string("100100")).str() == "001001");
  CHECK_THROWS_AS(BinaryWord::from_string(""), Error);
}

TEST_CASE("co_period") {
  CHECK(co_period(BinaryWord::from_string("001001")) == 2);
  CHECK(co_period(BinaryWord::from_string("01011")) == 1);
  CHECK(co_period(BinaryWord::from_string("1111")) == 4);
  for (std::int64_t n = 1; n <= 12; ++n)
    for (const auto& bits : oracles::all_words(n, n / 2)) {
      BinaryWord w(bits);
      CHECK(co_period(w) == oracles::coperiod_by_scan(w));
    }
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(BinaryWord::from_string("0011")));
  CHECK_FALSE(is_lyndon(BinaryWord::from_string("0101")));
  CHECK_FALSE(is_lyndon(BinaryWord::from_string("0110")));
  CHECK(is_lyndon(BinaryWord::from_string("0")));
  CHECK(is_lyndon(BinaryWord::from_string("1")));
}

TEST_CASE("lyndon repeats have the expected co-period") {
  for (std::int64_t len = 1; len <= 7; ++len) {
    for (std::int64_t k = 0; k <= len; ++k) {
      for (const BinaryWord& v : enumerate_lyndon(len, k)) {
        for (std::int64_t j = 1; len * j <= 14; ++j) {
          std::vector<std::uint8_t> bits;
          for (std::int64_t c = 0; c < j; ++c)
            bits.insert(bits.end(), v.bits().begin(), v.bits().end());
          CHECK(co_period(BinaryWord(std::move(bits))) == j);
        }
      }
    }
  }
}

TEST_CASE("enumerate necklaces, pinned examples") {
  auto n42 = enumerate_necklaces(4, 2);
  REQUIRE(n42.size() == 2);
  CHECK(n42[0].str() == "0011");
  CHECK(n42[1].str() == "0101");
  auto n53 = enumerate_necklaces(5, 3);
  REQUIRE(n53.size() == 2);
  CHECK(n53[0].str() == "00111");
  CHECK(n53[1].str() == "01011");
  auto zero_weight = enumerate_necklaces(6, 0);
  REQUIRE(zero_weight.size() == 1);
  CHECK(zero_weight[0].str() == "000000");
}

TEST_CASE("enumerate lyndon, pinned examples") {
  auto l42 = enumerate_lyndon(4, 2);
  REQUIRE(l42.size() == 1);
  CHECK(l42[0].str() == "0011");
  auto l11 = enumerate_lyndon(1, 1);
  REQUIRE(l11.size() == 1);
  CHECK(l11[0].str() == "1");
  auto l53 = enumerate_lyndon(5, 3);
  REQUIRE(l53.size() == 2);
  CHECK(l53[0].str() == "00111");
  CHECK(l53[1].str() == "01011");
}

TEST_CASE("both engines agree and match the rotation-class oracle") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto fast = enumerate_necklaces(n, k, Engine::fast);
      const auto filter = enumerate_necklaces(n, k, Engine::filter);
      REQUIRE(fast.size() == filter.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i] == filter[i]);
        CHECK(fast[i].coperiod() == filter[i].coperiod());
      }
      CHECK(as_strings(fast) == oracles::necklace_classes(n, k));
      CHECK(enumerate_lyndon(n, k, Engine::fast) == enumerate_lyndon(n, k, Engine::filter));
    }
  }
}

TEST_CASE("enumerated representatives are canonical and sorted") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto list = enumerate_necklaces(n, k);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Necklace& neck = list[i];
        const Necklace again = canonical_form(neck.canonical());
        CHECK(again == neck);
        CHECK(again.coperiod() == neck.coperiod());
        if (i > 0) CHECK(list[i - 1] < list[i]);
      }
    }
  }
}

TEST_CASE("co-period filter") {
  auto both = enumerate_coperiod_div(4, 2, 2);
  REQUIRE(both.size() == 2);
  CHECK(both[0].str() == "0011");
  CHECK(both[1].str() == "0101");
  auto primitive_only = enumerate_coperiod_div(4, 2, 1);
  REQUIRE(primitive_only.size() == 1);
  CHECK(primitive_only[0].str() == "0011");
  CHECK(enumerate_coperiod_div(6, 0, 1).empty());
  CHECK(enumerate_coperiod_div(6, 0, 3).empty());
}

TEST_CASE("co-period divisor lists line up with necklaces and lyndon words") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(enumerate_coperiod_div(n, k, 0) == enumerate_necklaces(n, k));
      if (n < 2) continue;  // r = 1 needs n >= 2
      const auto primitive = enumerate_coperiod_div(n, k, 1);
      const auto lyndon = enumerate_lyndon(n, k);
      REQUIRE(primitive.size() == lyndon.size());
      for (std::size_t i = 0; i < primitive.size(); ++i)
        CHECK(primitive[i].canonical() == lyndon[i]);
    }
  }
}

TEST_CASE("counting formulas, pinned examples") {
  CHECK(count_necklaces(4, 2) == 2);
  CHECK(count_necklaces(9, 0) == 1);
  CHECK(count_necklaces(5, 3) == 2);
  CHECK(count_lyndon(4, 2) == 1);
  CHECK(count_lyndon(6, 2) == 2);
  CHECK(count_lyndon(1, 1) == 1);
  CHECK(count_coperiod_div(4, 2, 2) == 2);
  CHECK(count_coperiod_div(4, 2, 0) == count_necklaces(4, 2));
  CHECK(count_coperiod_div(4, 2, 1) == count_lyndon(4, 2));
  CHECK(count_lplus(6, 2) == 3);
  CHECK(count_lplus(5, 3) == 2);
  CHECK(count_lplus(8, 4) == count_lyndon(8, 4));
  CHECK(count_lyndon(8, 4) == 8);
}

TEST_CASE("counts equal enumeration lengths") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(count_necklaces(n, k) == enumerate_necklaces(n, k).size());
      CHECK(count_lyndon(n, k) == enumerate_lyndon(n, k).size());
      for (std::int64_t r = 0; r < n; ++r)
        CHECK(count_coperiod_div(n, k, r) == enumerate_coperiod_div(n, k, r).size());
    }
  }
}

TEST_CASE("totals match sums over weights") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    ExactInt necklaces = 0, lyndon = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      necklaces += count_necklaces(n, k);
      lyndon += count_lyndon(n, k);
    }
    CHECK(necklaces == count_necklaces_total(n));
    CHECK(lyndon == count_lyndon_total(n));
  }
}

TEST_CASE("formula numerators divide exactly up to n = 64") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK_NOTHROW(count_necklaces(n, k));
      CHECK_NOTHROW(count_lyndon(n, k));
      CHECK_NOTHROW(count_lplus(n, k));
      for (std::int64_t r : {0, 1, 2, 3, 5, 8, 12})
        if (r < n) CHECK_NOTHROW(count_coperiod_div(n, k, r));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_necklaces(0, 0), Error);
  CHECK_THROWS_AS(enumerate_necklaces(4, 5), Error);
  CHECK_THROWS_AS(enumerate_coperiod_div(4, 2, 4), Error);
  CHECK_THROWS_AS(count_coperiod_div(4, 2, -1), Error);
}

}  // TEST_SUITE
