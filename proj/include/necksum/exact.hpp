#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "necksum/error.hpp"

namespace necksum {

// All cardinalities and polynomial coefficients are exact integers.
using ExactInt = boost::multiprecision::cpp_int;

// 2-adic valuation. The infinite value arises only as nu2(0).
class Valuation2 {
 public:
  static Valuation2 infinite() { return Valuation2(true, 0); }
  static Valuation2 finite(std::int64_t v) { return Valuation2(false, v); }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const {
    require(!infinite_, errc::invalid_argument, "valuation is infinite");
    return value_;
  }

  friend bool operator==(const Valuation2& a, const Valuation2& b) = default;
  friend bool operator<(const Valuation2& a, const Valuation2& b) {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation2& v);

 private:
  Valuation2(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

// Divisors of n in ascending order, by trial division.
std::vector<std::int64_t> divisors(std::int64_t n);

// Euler's totient.
ExactInt euler_phi(std::int64_t n);

// Moebius function, in {-1, 0, 1}.
int moebius(std::int64_t n);

// nu2(m) for m >= 0; nu2(0) is infinite.
Valuation2 nu2(std::int64_t m);

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
ExactInt binomial(std::int64_t n, std::int64_t k);

// Ramanujan sum c_d(r), via the divisor sum  sum_{j | gcd(r,d)} j * mu(d/j).
// gcd(0, d) is taken to be d, so c_d(0) = phi(d). The closed form
// mu(d/g) * phi(d) / phi(d/g) with g = gcd(r, d) is evaluated as well and the
// two must agree.
ExactInt ramanujan_sum(std::int64_t d, std::int64_t r);
ExactInt ramanujan_sum_divisor_form(std::int64_t d, std::int64_t r);
ExactInt ramanujan_sum_closed_form(std::int64_t d, std::int64_t r);

// numerator / divisor, throwing non_exact_division unless it divides evenly.
ExactInt exact_div(const ExactInt& numerator, std::int64_t divisor, const char* what);

// Dense integer polynomial, coefficient index = power of x, trailing zeros
// trimmed so the zero polynomial has no stored coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coeffs);

  static IntPolynomial constant(ExactInt c);
  static IntPolynomial monomial(ExactInt c, std::size_t power);
  // (1 - (-x)^d)^e, expanded exactly via binomials.
  static IntPolynomial one_minus_neg_x_pow(std::int64_t d, std::int64_t e);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  ExactInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactInt(0);
  }
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }
  ExactInt eval(const ExactInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const ExactInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

 private:
  void trim();
  std::vector<ExactInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// Quotient p / q with zero remainder; non_exact_division otherwise.
IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q);
// p / n with every coefficient divisible by n; non_exact_division otherwise.
IntPolynomial poly_scale_exact(const IntPolynomial& p, std::int64_t n);

}  // namespace necksum
