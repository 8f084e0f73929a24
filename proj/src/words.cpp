#include "necksum/words.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace necksum {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  require(!bits_.empty(), errc::invalid_argument, "word must be non-empty");
  for (auto b : bits_) {
    require(b <= 1, errc::invalid_argument, "word bits must be 0 or 1");
    weight_ += b;
  }
}

BinaryWord BinaryWord::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    require(c == '0' || c == '1', errc::invalid_argument, "word characters must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros(std::size_t n) {
  return BinaryWord(std::vector<std::uint8_t>(n, 0));
}

BinaryWord BinaryWord::rotated(std::size_t j) const {
  const std::size_t n = bits_.size();
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = bits_[(j + i) % n];
  return BinaryWord(std::move(out));
}

std::string BinaryWord::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const Necklace& n) { return os << n.str(); }

namespace {

// Compares the rotation of w starting at i with the one starting at j.
int compare_rotations(const BinaryWord& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.length();
  for (std::size_t t = 0; t < n; ++t) {
    const int a = w.bit((i + t) % n);
    const int b = w.bit((j + t) % n);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

}  // namespace

std::int64_t co_period(const BinaryWord& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.length());
  for (std::int64_t len : divisors(n)) {
    bool periodic = true;
    for (std::int64_t i = len; i < n && periodic; ++i)
      periodic = w.bit(static_cast<std::size_t>(i)) == w.bit(static_cast<std::size_t>(i % len));
    if (periodic) return n / len;
  }
  return 1;  // unreachable; len == n always matches
}

bool is_lyndon(const BinaryWord& w) {
  // Strictly smallest among rotations; a tie at j > 0 means non-primitive.
  for (std::size_t j = 1; j < w.length(); ++j)
    if (compare_rotations(w, j, 0) <= 0) return false;
  return true;
}

Necklace canonical_form(const BinaryWord& w) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < w.length(); ++j)
    if (compare_rotations(w, j, best) < 0) best = j;
  return Necklace(w.rotated(best), co_period(w));
}

namespace {

// Fixed-density necklace generation: the classic pre-necklace recursion,
// pruned by the number of ones still required. Words come out in ascending
// lexicographic order as their own least rotations; p is the length of the
// primitive prefix, so the co-period of an emitted word is n / p.
template <typename Emit>
void generate_fixed_density(std::int64_t n, std::int64_t k, bool lyndon_only, Emit&& emit) {
  std::vector<std::uint8_t> a(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t ones = 0;
  auto rec = [&](auto&& self, std::int64_t t, std::int64_t p) -> void {
    if (t > n) {
      if (n % p == 0 && ones == k && (!lyndon_only || p == n)) {
        std::vector<std::uint8_t> bits(a.begin() + 1, a.end());
        emit(BinaryWord(std::move(bits)), n / p);
      }
      return;
    }
    for (std::uint8_t v = a[static_cast<std::size_t>(t - p)]; v <= 1; ++v) {
      a[static_cast<std::size_t>(t)] = v;
      ones += v;
      if (ones <= k && ones + (n - t) >= k)
        self(self, t + 1, v == a[static_cast<std::size_t>(t - p)] ? p : t);
      ones -= v;
    }
  };
  rec(rec, 1, 1);
}

// Oracle engine: walk all C(n,k) words in lexicographic order and keep those
// equal to their least rotation.
template <typename Emit>
void filter_fixed_density(std::int64_t n, std::int64_t k, bool lyndon_only, Emit&& emit) {
  require(n <= 62, errc::invalid_argument, "filter engine limited to n <= 62");
  auto emit_if_canonical = [&](std::uint64_t mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
      bits[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
    BinaryWord w(std::move(bits));
    bool canonical = true;
    for (std::size_t j = 1; j < w.length() && canonical; ++j)
      canonical = compare_rotations(w, j, 0) >= 0;
    if (!canonical) return;
    const std::int64_t j = co_period(w);
    if (lyndon_only && j != 1) return;
    emit(std::move(w), j);
  };
  if (k == 0) {
    emit_if_canonical(0);
    return;
  }
  // Gosper's hack: k-bit masks in increasing order.
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    emit_if_canonical(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    if (r >= limit || r < mask) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

template <typename Emit>
void enumerate_words(std::int64_t n, std::int64_t k, bool lyndon_only, Engine engine,
                     Emit&& emit) {
  require(n >= 1, errc::invalid_argument, "length must be positive");
  require(k >= 0 && k <= n, errc::invalid_argument, "weight must satisfy 0 <= k <= n");
  if (engine == Engine::fast)
    generate_fixed_density(n, k, lyndon_only, emit);
  else
    filter_fixed_density(n, k, lyndon_only, emit);
}

}  // namespace

std::vector<Necklace> enumerate_necklaces(std::int64_t n, std::int64_t k, Engine engine) {
  std::vector<Necklace> out;
  enumerate_words(n, k, false, engine,
                  [&](BinaryWord w, std::int64_t j) { out.emplace_back(std::move(w), j); });
  return out;
}

std::vector<BinaryWord> enumerate_lyndon(std::int64_t n, std::int64_t k, Engine engine) {
  std::vector<BinaryWord> out;
  enumerate_words(n, k, true, engine, [&](BinaryWord w, std::int64_t) { out.push_back(std::move(w)); });
  return out;
}

std::vector<Necklace> enumerate_coperiod_div(std::int64_t n, std::int64_t k, std::int64_t r,
                                             Engine engine) {
  require(r >= 0 && r < n, errc::invalid_argument, "co-period divisor bound needs 0 <= r < n");
  std::vector<Necklace> out;
  enumerate_words(n, k, false, engine, [&](BinaryWord w, std::int64_t j) {
    if (r % j == 0) out.emplace_back(std::move(w), j);  // j | 0 holds for every j
  });
  return out;
}

namespace {

void check_count_args(std::int64_t n, std::int64_t k) {
  require(n >= 1, errc::invalid_argument, "length must be positive");
  require(k >= 0 && k <= n, errc::invalid_argument, "weight must satisfy 0 <= k <= n");
}

}  // namespace

ExactInt count_necklaces(std::int64_t n, std::int64_t k) {
  check_count_args(n, k);
  ExactInt sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, k)))
    sum += euler_phi(d) * binomial(n / d, k / d);
  return exact_div(sum, n, "count_necklaces");
}

ExactInt count_necklaces_total(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "length must be positive");
  ExactInt sum = 0;
  for (std::int64_t d : divisors(n)) sum += euler_phi(d) << (n / d);
  return exact_div(sum, n, "count_necklaces_total");
}

ExactInt count_lyndon(std::int64_t n, std::int64_t k) {
  check_count_args(n, k);
  ExactInt sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, k)))
    sum += ExactInt(moebius(d)) * binomial(n / d, k / d);
  return exact_div(sum, n, "count_lyndon");
}

ExactInt count_lyndon_total(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "length must be positive");
  ExactInt sum = 0;
  for (std::int64_t d : divisors(n)) sum += ExactInt(moebius(d)) << (n / d);
  return exact_div(sum, n, "count_lyndon_total");
}

ExactInt count_coperiod_div(std::int64_t n, std::int64_t k, std::int64_t r) {
  check_count_args(n, k);
  require(r >= 0 && r < n, errc::invalid_argument, "co-period divisor bound needs 0 <= r < n");
  ExactInt sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, k)))
    sum += binomial(n / d, k / d) * ramanujan_sum(d, r);
  return exact_div(sum, n, "count_coperiod_div");
}

ExactInt count_lplus(std::int64_t n, std::int64_t k) {
  check_count_args(n, k);
  ExactInt result = count_lyndon(n, k);
  if (n % 2 == 0 && k % 4 == 2) result += count_lyndon(n / 2, k / 2);
  return result;
}

}  // namespace necksum
