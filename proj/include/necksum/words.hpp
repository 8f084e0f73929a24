#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "necksum/exact.hpp"

namespace necksum {

// Fixed-length bit sequence. Text form is most significant position first,
// e.g. "01011".
class BinaryWord {
 public:
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  static BinaryWord from_string(std::string_view text);
  static BinaryWord zeros(std::size_t n);

  std::size_t length() const { return bits_.size(); }
  std::int64_t weight() const { return weight_; }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }  // 0-indexed
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  // Rotation starting at 0-indexed position j: w_j ... w_{n-1} w_0 ... w_{j-1}.
  BinaryWord rotated(std::size_t j) const;

  std::string str() const;

  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.bits_ <=> b.bits_; }
  friend bool operator==(const BinaryWord& a, const BinaryWord& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

 private:
  std::vector<std::uint8_t> bits_;
  std::int64_t weight_ = 0;
};

// Largest j with w = v^j, v primitive; j divides the length.
std::int64_t co_period(const BinaryWord& w);

// Primitive and strictly smallest among its rotations. Length-1 words count.
bool is_lyndon(const BinaryWord& w);

// Conjugacy class of a word, held as the lexicographically smallest rotation.
class Necklace {
 public:
  // canonical must already be the least rotation and coperiod its co-period;
  // use canonical_form() to classify an arbitrary word.
  Necklace(BinaryWord canonical, std::int64_t coperiod)
      : canonical_(std::move(canonical)), coperiod_(coperiod) {}

  const BinaryWord& canonical() const { return canonical_; }
  std::int64_t coperiod() const { return coperiod_; }
  std::size_t length() const { return canonical_.length(); }
  std::int64_t weight() const { return canonical_.weight(); }
  bool primitive() const { return coperiod_ == 1; }
  std::string str() const { return canonical_.str(); }

  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.canonical_ <=> b.canonical_;
  }
  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.canonical_ == b.canonical_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Necklace& n);

 private:
  BinaryWord canonical_;
  std::int64_t coperiod_;
};

// Necklace class of w: least rotation plus co-period.
Necklace canonical_form(const BinaryWord& w);

// Two engines with mandatory agreement: `fast` generates fixed-density
// necklaces directly, `filter` scans all C(n,k) words and keeps the canonical
// ones. Both emit ascending canonical representatives.
enum class Engine { fast, filter };

std::vector<Necklace> enumerate_necklaces(std::int64_t n, std::int64_t k,
                                          Engine engine = Engine::fast);
std::vector<BinaryWord> enumerate_lyndon(std::int64_t n, std::int64_t k,
                                         Engine engine = Engine::fast);
// Necklaces of weight k whose co-period divides r; every j divides 0.
std::vector<Necklace> enumerate_coperiod_div(std::int64_t n, std::int64_t k, std::int64_t r,
                                             Engine engine = Engine::fast);

ExactInt count_necklaces(std::int64_t n, std::int64_t k);
ExactInt count_necklaces_total(std::int64_t n);
ExactInt count_lyndon(std::int64_t n, std::int64_t k);
ExactInt count_lyndon_total(std::int64_t n);
ExactInt count_coperiod_div(std::int64_t n, std::int64_t k, std::int64_t r);

// |L(n,k)|, augmented by |L(n/2,k/2)| when n is even and k = 2 mod 4.
ExactInt count_lplus(std::int64_t n, std::int64_t k);

}  // namespace necksum
