#include "necksum/perms.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "necksum/words.hpp"

namespace necksum {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = static_cast<int>(oneline_.size());
  require(n >= 1, errc::invalid_argument, "permutation must be non-empty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : oneline_) {
    require(v >= 1 && v <= n, errc::invalid_argument, "permutation value out of range");
    require(!seen[static_cast<std::size_t>(v)], errc::invalid_argument,
            "permutation value repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos) {
    std::string buf(text);
    for (auto& c : buf)
      if (c == ',') c = ' ';
    std::istringstream is(buf);
    int v;
    while (is >> v) values.push_back(v);
    require(is.eof(), errc::invalid_argument, "permutation parse: trailing garbage");
  } else {
    for (char c : text) {
      require(std::isdigit(static_cast<unsigned char>(c)), errc::invalid_argument,
              "permutation parse: expected digits");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
      v = at(v);
    } while (v != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::oneline_str() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : oneline_) os << v;
  } else {
    for (std::size_t i = 0; i < oneline_.size(); ++i) {
      if (i > 0) os << ' ';
      os << oneline_[i];
    }
  }
  return os.str();
}

std::string Permutation::cycle_str() const {
  std::ostringstream os;
  for (const auto& cycle : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) os << ',';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.oneline_str(); }

std::optional<int> is_v_shaped(const Permutation& p) {
  const int n = p.size();
  int min_pos = 1;
  for (int i = 2; i <= n; ++i)
    if (p.at(i) < p.at(min_pos)) min_pos = i;
  for (int i = 1; i < min_pos; ++i)
    if (p.at(i) <= p.at(i + 1)) return std::nullopt;
  for (int i = min_pos; i < n; ++i)
    if (p.at(i) >= p.at(i + 1)) return std::nullopt;
  return min_pos;
}

bool is_cyclic(const Permutation& p) {
  const int n = p.size();
  int v = 1;
  int steps = 0;
  do {
    v = p.at(v);
    ++steps;
  } while (v != 1 && steps <= n);
  return steps == n;
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - p.at(n + 1 - i);
  return Permutation(std::move(out));
}

std::vector<Permutation> enumerate_cvp(std::int64_t n, std::int64_t k) {
  require(n >= 1, errc::invalid_argument, "enumerate_cvp: n must be positive");
  require(k >= 1 && k <= n, errc::invalid_argument, "enumerate_cvp: position needs 1 <= k <= n");
  std::vector<Permutation> out;
  // Descending prefix takes a (k-1)-subset of {2..n}; the minimum 1 sits at
  // position k and the complement ascends behind it.
  std::vector<int> prefix;
  auto build = [&]() {
    std::vector<int> oneline(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      oneline[i] = prefix[prefix.size() - 1 - i];  // descending
      used[static_cast<std::size_t>(prefix[i])] = true;
    }
    oneline[static_cast<std::size_t>(k - 1)] = 1;
    used[1] = true;
    std::size_t pos = static_cast<std::size_t>(k);
    for (int v = 2; v <= n; ++v)
      if (!used[static_cast<std::size_t>(v)]) oneline[pos++] = v;
    Permutation p(std::move(oneline));
    if (is_cyclic(p)) out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<std::int64_t>(prefix.size()) == k - 1) {
      build();
      return;
    }
    const std::int64_t still = k - 1 - static_cast<std::int64_t>(prefix.size());
    for (int v = next; v + still - 1 <= n; ++v) {
      prefix.push_back(v);
      self(self, v + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 2);
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial thibon_poly(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "thibon_poly: n must be positive");
  IntPolynomial acc;
  for (std::int64_t d : divisors(n)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    IntPolynomial term = IntPolynomial::one_minus_neg_x_pow(d, n / d);
    term *= ExactInt(mu);
    acc += term;
  }
  return poly_scale_exact(poly_divide_exact(acc, IntPolynomial({ExactInt(1), ExactInt(1)})), n);
}

ExactInt count_cvp(std::int64_t n, std::int64_t k) {
  require(n >= 1, errc::invalid_argument, "count_cvp: n must be positive");
  require(k >= 0 && k <= n + 1, errc::invalid_argument, "count_cvp: position out of range");
  if (k == 0 || k == n + 1) return 0;
  ExactInt acc = 0;
  for (std::int64_t i = 0; i <= k - 1; ++i) {
    ExactInt term = count_lplus(n, i);
    if ((k - 1 - i) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

ExactInt count_cvp_pair(std::int64_t n, std::int64_t k) {
  require(k >= 0 && k <= n, errc::invalid_argument, "count_cvp_pair: needs 0 <= k <= n");
  return count_cvp(n, k) + count_cvp(n, k + 1);
}

}  // namespace necksum
