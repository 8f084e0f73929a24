#include "necksum/perms.hpp"

#include <doctest.h>

#include <set>

#include "necksum/subsets.hpp"
#include "necksum/words.hpp"
#include "oracles.hpp"

using namespace necksum;

namespace {

// Independent route: scan every permutation of [n].
std::vector<Permutation> cvp_by_full_scan(int n, int k) {
  std::vector<Permutation> out;
  for (const auto& oneline : oracles::all_permutations(n)) {
    Permutation p(oneline);
    const auto min_pos = is_v_shaped(p);
    if (min_pos && *min_pos == k && is_cyclic(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_SUITE("perms") {

TEST_CASE("parsing and rendering") {
  const Permutation p = Permutation::parse("54213");
  CHECK(p.oneline_str() == "54213");
  CHECK(p.cycle_str() == "(1,5,3,2,4)");
  CHECK(Permutation::parse("5,4,2,1,3") == p);
  CHECK(Permutation::parse("10 9 8 7 6 5 4 3 2 1").size() == 10);
  CHECK_THROWS_AS(Permutation::parse("512"), Error);
  CHECK_THROWS_AS(Permutation::parse("1231"), Error);
  CHECK_THROWS_AS(Permutation::parse(""), Error);
}

TEST_CASE("v-shape detection") {
  CHECK(is_v_shaped(Permutation::parse("54213")) == 4);
  CHECK(is_v_shaped(Permutation::identity(6)) == 1);
  CHECK(is_v_shaped(Permutation::parse("1")) == 1);
  CHECK_FALSE(is_v_shaped(Permutation::parse("2143")).has_value());
}

TEST_CASE("cyclicity") {
  CHECK(is_cyclic(Permutation::parse("54213")));
  CHECK(is_cyclic(Permutation::parse("651234")));
  CHECK_FALSE(is_cyclic(Permutation::identity(4)));
  CHECK(is_cyclic(Permutation::parse("1")));
}

TEST_CASE("enumerate_cvp matches the full permutation scan") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(enumerate_cvp(n, k) == cvp_by_full_scan(n, k));
}

TEST_CASE("enumerate_cvp, pinned examples") {
  const auto c54 = enumerate_cvp(5, 4);
  REQUIRE(c54.size() == 1);
  CHECK(c54[0] == Permutation::parse("54213"));
  const auto c63 = enumerate_cvp(6, 3);
  bool found = false;
  for (const auto& p : c63) found = found || p == Permutation::parse("651234");
  CHECK(found);
  CHECK(enumerate_cvp(5, 1).empty());
}

TEST_CASE("thibon polynomial, pinned values") {
  CHECK(thibon_poly(5) ==
        IntPolynomial({ExactInt(0), ExactInt(1), ExactInt(1), ExactInt(1)}));
  CHECK(thibon_poly(1) == IntPolynomial::constant(1));
  CHECK(thibon_poly(5).eval(1) == 3);  // (2^5 - 2) / 10
}

TEST_CASE("thibon coefficients equal enumeration sizes") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const IntPolynomial poly = thibon_poly(n);
    for (std::int64_t k = 1; k <= n; ++k)
      CHECK(poly.coeff(static_cast<std::size_t>(k - 1)) == enumerate_cvp(n, k).size());
  }
}

TEST_CASE("count_cvp agrees with thibon and enumeration") {
  CHECK(count_cvp(5, 4) == 1);
  CHECK(count_cvp(5, 1) == 0);
  CHECK(count_cvp(6, 3) == 2);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const IntPolynomial poly = thibon_poly(n);
    CHECK(count_cvp(n, 0) == 0);
    CHECK(count_cvp(n, n + 1) == 0);
    for (std::int64_t k = 1; k <= n; ++k) {
      CHECK(count_cvp(n, k) == poly.coeff(static_cast<std::size_t>(k - 1)));
      CHECK(count_cvp(n, k) == enumerate_cvp(n, k).size());
    }
  }
}

TEST_CASE("adjacent position pairs count augmented lyndon classes") {
  CHECK(count_cvp_pair(5, 3) == 2);
  CHECK(count_cvp_pair(6, 2) == 3);
  CHECK(count_cvp_pair(6, 2) == count_lplus(6, 2));
  for (std::int64_t n = 1; n <= 12; ++n) {
    CHECK(count_cvp_pair(n, 0) == count_cvp(n, 1));
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(count_cvp_pair(n, k) == count_lplus(n, k));
  }
}

TEST_CASE("totals reduce to the odd-divisor formula") {
  for (std::int64_t n = 1; n <= 16; ++n) {
    ExactInt total = 0;
    for (std::int64_t k = 1; k <= n; ++k) total += count_cvp(n, k);
    ExactInt expected = 0;
    for (std::int64_t d : divisors(n))
      if (d % 2 != 0) expected += ExactInt(moebius(d)) << (n / d);
    CHECK(total == exact_div(expected, 2 * n, "total"));
  }
}

TEST_CASE("position counts match short subset counts at residue one") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    ExactInt cvp_total = 0, subset_total = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      CHECK(count_cvp(n, k) == count_s_short(n, k - 1, 1 % n));
      cvp_total += count_cvp(n, k);
      subset_total += count_s_short(n, k - 1, 1 % n);
    }
    CHECK(cvp_total == subset_total);
  }
}

TEST_CASE("reverse complement maps onto the cyclic unimodal permutations") {
  CHECK(reverse_complement(Permutation::parse("54213")) == Permutation::parse("35421"));
  auto is_unimodal = [](const Permutation& p) {
    int max_pos = 1;
    for (int i = 2; i <= p.size(); ++i)
      if (p.at(i) > p.at(max_pos)) max_pos = i;
    for (int i = 1; i < max_pos; ++i)
      if (p.at(i) >= p.at(i + 1)) return false;
    for (int i = max_pos; i < p.size(); ++i)
      if (p.at(i) <= p.at(i + 1)) return false;
    return true;
  };
  for (int n = 1; n <= 9; ++n) {
    std::set<Permutation> mapped;
    for (int k = 1; k <= n; ++k) {
      for (const Permutation& p : enumerate_cvp(n, k)) {
        const Permutation rc = reverse_complement(p);
        CHECK(is_cyclic(rc));
        CHECK(is_unimodal(rc));
        CHECK(reverse_complement(rc) == p);
        CHECK(mapped.insert(rc).second);
      }
    }
    if (n <= 8) {
      std::set<Permutation> unimodal_cyclic;
      for (const auto& oneline : oracles::all_permutations(n)) {
        Permutation p(oneline);
        if (is_unimodal(p) && is_cyclic(p)) unimodal_cyclic.insert(std::move(p));
      }
      CHECK(mapped == unimodal_cyclic);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_cvp(5, 0), Error);
  CHECK_THROWS_AS(enumerate_cvp(5, 6), Error);
  CHECK_THROWS_AS(count_cvp(5, 7), Error);
}

}  // TEST_SUITE
