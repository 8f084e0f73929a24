#include "necksum/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace necksum {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t m = a % n;
  return m < 0 ? m + n : m;
}

}  // namespace

ResidueSubset::ResidueSubset(std::int64_t modulus, std::vector<std::int64_t> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  require(modulus_ >= 1, errc::invalid_argument, "subset modulus must be positive");
  std::int64_t prev = 0;
  std::int64_t sum = 0;
  for (std::int64_t e : elements_) {
    require(e >= 1 && e <= modulus_, errc::invalid_argument, "subset element out of [1,n]");
    require(e > prev, errc::invalid_argument, "subset elements must be strictly increasing");
    prev = e;
    sum = (sum + e) % modulus_;
  }
  residue_ = sum;
}

std::string ResidueSubset::str(bool zero_based) const {
  std::vector<std::int64_t> shown(elements_);
  if (zero_based) {
    for (auto& e : shown)
      if (e == modulus_) e = 0;
    std::sort(shown.begin(), shown.end());
  }
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i > 0) os << ',';
    os << shown[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ResidueSubset& s) { return os << s.str(); }

std::vector<ResidueSubset> enumerate_subsets(std::int64_t n, std::int64_t k, std::int64_t r,
                                             Universe universe) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(r >= 0 && r < n, errc::invalid_argument, "residue needs 0 <= r < n");
  const std::int64_t m = universe == Universe::Full ? n : n - 1;
  require(k >= 0 && k <= m, errc::invalid_argument, "subset size out of range for universe");

  std::vector<ResidueSubset> out;
  std::vector<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, std::int64_t next, std::int64_t sum) -> void {
    if (static_cast<std::int64_t>(chosen.size()) == k) {
      if (sum == r) out.emplace_back(n, chosen);
      return;
    }
    const std::int64_t still = k - static_cast<std::int64_t>(chosen.size());
    for (std::int64_t e = next; e + still - 1 <= m; ++e) {
      chosen.push_back(e);
      self(self, e + 1, (sum + e) % n);
      chosen.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

ExactInt count_sbar(std::int64_t n, std::int64_t k, std::int64_t r) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(k >= 0 && k <= n, errc::invalid_argument, "subset size needs 0 <= k <= n");
  r = floor_mod(r, n);
  ExactInt sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, k))) {
    ExactInt term = binomial(n / d, k / d) * ramanujan_sum(d, r);
    if ((k / d + k) % 2 != 0) term = -term;
    sum += term;
  }
  return exact_div(sum, n, "count_sbar");
}

ExactInt count_s_short(std::int64_t n, std::int64_t k, std::int64_t r) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(k >= 0 && k <= n - 1, errc::invalid_argument, "subset size needs 0 <= k <= n-1");
  ExactInt acc = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    ExactInt term = count_sbar(n, i, r);
    if ((k - i) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

ExactInt count_subsets_dp(std::int64_t n, std::int64_t k, std::int64_t r, Universe universe) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(r >= 0 && r < n, errc::invalid_argument, "residue needs 0 <= r < n");
  const std::int64_t m = universe == Universe::Full ? n : n - 1;
  require(k >= 0 && k <= m, errc::invalid_argument, "subset size out of range for universe");
  // dp[j][s] = subsets of the elements seen so far with size j and sum s mod n.
  std::vector<std::vector<ExactInt>> dp(static_cast<std::size_t>(k) + 1,
                                        std::vector<ExactInt>(static_cast<std::size_t>(n)));
  dp[0][0] = 1;
  for (std::int64_t e = 1; e <= m; ++e) {
    for (std::int64_t j = std::min(e, k); j >= 1; --j) {
      for (std::int64_t s = 0; s < n; ++s) {
        const ExactInt& from = dp[static_cast<std::size_t>(j - 1)]
                                 [static_cast<std::size_t>(floor_mod(s - e, n))];
        if (from != 0) dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] += from;
      }
    }
  }
  return dp[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
}

IntPolynomial sbar_generating_poly(std::int64_t n, std::int64_t r) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(r >= 0 && r < n, errc::invalid_argument, "residue needs 0 <= r < n");
  IntPolynomial sum;
  for (std::int64_t d : divisors(n)) {
    IntPolynomial term = IntPolynomial::one_minus_neg_x_pow(d, n / d);
    term *= ramanujan_sum(d, r);
    sum += term;
  }
  return poly_scale_exact(sum, n);
}

IntPolynomial s1_short_poly(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  IntPolynomial sum;
  for (std::int64_t d : divisors(n)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    IntPolynomial term = IntPolynomial::one_minus_neg_x_pow(d, n / d);
    term *= ExactInt(mu);
    sum += term;
  }
  const IntPolynomial one_plus_x({ExactInt(1), ExactInt(1)});
  return poly_scale_exact(poly_divide_exact(sum, one_plus_x), n);
}

namespace {

// Returns (g, x, y) with a x + b y = g = gcd(a, b), g >= 0.
struct ExtGcd {
  std::int64_t g, x, y;
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return a >= 0 ? ExtGcd{a, 1, 0} : ExtGcd{-a, -1, 0};
  ExtGcd sub = ext_gcd(b, a % b);
  return ExtGcd{sub.g, sub.y, sub.x - (a / b) * sub.y};
}

std::int64_t count_distinct_primes(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

}  // namespace

BezoutTriple bezout_solve(std::int64_t n, std::int64_t k, std::int64_t r) {
  require(n >= 1, errc::invalid_argument, "bezout_solve: n must be positive");
  require(k >= 0 && r >= 0, errc::invalid_argument, "bezout_solve: k, r must be non-negative");
  const std::int64_t g = std::gcd(std::gcd(n, k), r);
  require(g == 1, errc::not_coprime, "bezout_solve: gcd(n, k, r) must be 1");

  const ExtGcd nk = ext_gcd(n, k);        // n*nk.x + k*nk.y = gcd(n,k)
  const ExtGcd full = ext_gcd(nk.g, r);   // gcd(n,k)*full.x + r*full.y = 1
  std::int64_t x = nk.x * full.x;
  std::int64_t y = nk.y * full.x;
  std::int64_t z = full.y;

  const std::int64_t bound = n * count_distinct_primes(n) + 1;
  for (std::int64_t j = 0; j < bound; ++j) {
    const std::int64_t zj = z + k * j;
    if (std::gcd(floor_mod(zj, n), n) == 1)
      return BezoutTriple{x, y - r * j, zj, n, k, r};
  }
  fail(errc::search_exhausted, "bezout_solve: no coprime z found within the scan bound");
}

ResidueSubset affine_bijection(const ResidueSubset& a, std::int64_t y, std::int64_t z) {
  const std::int64_t n = a.modulus();
  require(std::gcd(floor_mod(z, n), n) == 1, errc::z_not_coprime,
          "affine map needs gcd(z, n) = 1");
  std::vector<std::int64_t> mapped;
  mapped.reserve(a.elements().size());
  for (std::int64_t e : a.elements()) {
    std::int64_t v = floor_mod(z * e + y, n);
    mapped.push_back(v == 0 ? n : v);
  }
  std::sort(mapped.begin(), mapped.end());
  return ResidueSubset(n, std::move(mapped));
}

}  // namespace necksum
