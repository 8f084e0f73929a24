#include "necksum/exact.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace necksum {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "INVALID_ARGUMENT";
    case errc::non_exact_division: return "NON_EXACT_DIVISION";
    case errc::not_coprime: return "NOT_COPRIME";
    case errc::search_exhausted: return "SEARCH_EXHAUSTED";
    case errc::z_not_coprime: return "Z_NOT_COPRIME";
    case errc::not_cyclic: return "NOT_CYCLIC";
    case errc::shape_violation: return "SHAPE_VIOLATION";
    case errc::unexpected_coperiod: return "UNEXPECTED_COPERIOD";
    case errc::not_in_domain: return "NOT_IN_DOMAIN";
    case errc::ambiguous_anchor: return "AMBIGUOUS_ANCHOR";
    case errc::gcd_not_one: return "GCD_NOT_ONE";
  }
  return "UNKNOWN";
}

std::ostream& operator<<(std::ostream& os, const Valuation2& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// Distinct prime factors by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

ExactInt euler_phi(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return ExactInt(result);
}

int moebius(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "moebius: n must be positive");
  int count = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count % 2 == 0 ? 1 : -1;
}

Valuation2 nu2(std::int64_t m) {
  require(m >= 0, errc::invalid_argument, "nu2: m must be non-negative");
  if (m == 0) return Valuation2::infinite();
  std::int64_t v = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++v;
  }
  return Valuation2::finite(v);
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  require(n >= 0, errc::invalid_argument, "binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

ExactInt ramanujan_sum_divisor_form(std::int64_t d, std::int64_t r) {
  require(d >= 1, errc::invalid_argument, "ramanujan_sum: d must be positive");
  require(r >= 0, errc::invalid_argument, "ramanujan_sum: r must be non-negative");
  const std::int64_t g = std::gcd(r, d);  // gcd(0, d) = d
  ExactInt sum = 0;
  for (std::int64_t j : divisors(g)) sum += ExactInt(j) * moebius(d / j);
  return sum;
}

ExactInt ramanujan_sum_closed_form(std::int64_t d, std::int64_t r) {
  require(d >= 1, errc::invalid_argument, "ramanujan_sum: d must be positive");
  require(r >= 0, errc::invalid_argument, "ramanujan_sum: r must be non-negative");
  const std::int64_t g = std::gcd(r, d);
  const std::int64_t m = d / g;
  const int mu = moebius(m);
  if (mu == 0) return 0;
  const ExactInt quotient = euler_phi(d) / euler_phi(m);  // phi(m) | phi(d) since m | d
  return mu * quotient;
}

ExactInt ramanujan_sum(std::int64_t d, std::int64_t r) {
  const ExactInt a = ramanujan_sum_divisor_form(d, r);
  const ExactInt b = ramanujan_sum_closed_form(d, r);
  if (a != b) throw std::logic_error("ramanujan_sum: closed forms disagree");
  return a;
}

ExactInt exact_div(const ExactInt& numerator, std::int64_t divisor, const char* what) {
  require(divisor != 0, errc::invalid_argument, "exact_div: zero divisor");
  if (numerator % divisor != 0) {
    std::ostringstream os;
    os << what << ": " << numerator << " is not divisible by " << divisor;
    fail(errc::non_exact_division, os.str());
  }
  return numerator / divisor;
}

IntPolynomial::IntPolynomial(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(ExactInt c) {
  return IntPolynomial(std::vector<ExactInt>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(ExactInt c, std::size_t power) {
  std::vector<ExactInt> v(power + 1);
  v[power] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_neg_x_pow(std::int64_t d, std::int64_t e) {
  require(d >= 1, errc::invalid_argument, "one_minus_neg_x_pow: d must be positive");
  require(e >= 0, errc::invalid_argument, "one_minus_neg_x_pow: e must be non-negative");
  std::vector<ExactInt> v(static_cast<std::size_t>(d * e) + 1);
  for (std::int64_t j = 0; j <= e; ++j) {
    // (-1)^j * (-x)^(d j) contributes (-1)^(j (d+1)) x^(d j)
    ExactInt c = binomial(e, j);
    if ((j * (d + 1)) % 2 != 0) c = -c;
    v[static_cast<std::size_t>(d * j)] = std::move(c);
  }
  return IntPolynomial(std::move(v));
}

ExactInt IntPolynomial::eval(const ExactInt& x) const {
  ExactInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const ExactInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<ExactInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  require(!q.is_zero(), errc::invalid_argument, "poly_divide_exact: division by zero polynomial");
  if (p.is_zero()) return IntPolynomial();
  if (p.degree() < q.degree())
    fail(errc::non_exact_division, "poly_divide_exact: degree of dividend below divisor");
  std::vector<ExactInt> rem(p.coeffs());
  const auto& qc = q.coeffs();
  const ExactInt& lead = qc.back();
  const std::size_t dq = qc.size() - 1;
  std::vector<ExactInt> quot(rem.size() - dq);
  for (std::size_t i = rem.size(); i-- > dq;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0)
      fail(errc::non_exact_division, "poly_divide_exact: leading coefficient does not divide");
    ExactInt t = rem[i] / lead;
    for (std::size_t j = 0; j < qc.size(); ++j) rem[i - dq + j] -= t * qc[j];
    quot[i - dq] = std::move(t);
  }
  for (const auto& c : rem)
    if (c != 0) fail(errc::non_exact_division, "poly_divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

IntPolynomial poly_scale_exact(const IntPolynomial& p, std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "poly_scale_exact: n must be positive");
  std::vector<ExactInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(exact_div(c, n, "poly_scale_exact"));
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const ExactInt& c = coeffs_[i];
    if (c == 0) continue;
    ExactInt a = c < 0 ? ExactInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

}  // namespace necksum
