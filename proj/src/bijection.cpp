#include "necksum/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace necksum {

namespace {

// sigma_1 > ... > sigma_k and sigma_{k+1} < ... < sigma_n; exactly membership
// in CVP(n,k) u CVP(n,k+1) for cyclic sigma.
bool shape_ok(const Permutation& p, int k) {
  const int n = p.size();
  for (int i = 1; i < k; ++i)
    if (p.at(i) <= p.at(i + 1)) return false;
  for (int i = k + 1; i < n; ++i)
    if (p.at(i) >= p.at(i + 1)) return false;
  return true;
}

BinaryWord partial_sum_word(const BinaryWord& w) {
  std::vector<std::uint8_t> s(w.length());
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    acc = static_cast<std::uint8_t>((acc + w.bit(i)) & 1u);
    s[i] = acc;
  }
  return BinaryWord(std::move(s));
}

Permutation cycle_to_permutation(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> oneline(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    oneline[static_cast<std::size_t>(a[static_cast<std::size_t>(i)] - 1)] =
        a[static_cast<std::size_t>((i + 1) % n)];
  return Permutation(std::move(oneline));
}

}  // namespace

PsiResult psi_detailed(const Permutation& p, int k) {
  const int n = p.size();
  require(k >= 0 && k <= n, errc::invalid_argument, "psi: threshold needs 0 <= k <= n");
  require(is_cyclic(p), errc::not_cyclic, "psi: permutation is not a single cycle");
  require(shape_ok(p, k), errc::shape_violation,
          "psi: permutation does not decrease to position k then increase");

  // Cycle notation starting at 1; the image class is rotation-invariant.
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  int v = 1;
  for (int i = 0; i < n; ++i) {
    bits[static_cast<std::size_t>(i)] = v <= k ? 1 : 0;
    v = p.at(v);
  }
  BinaryWord cycle_word(std::move(bits));

  Necklace cls = canonical_form(cycle_word);
  if (cls.coperiod() == 1) return PsiResult{cls, std::move(cycle_word), false};

  if (cls.coperiod() == 2) {
    require(n % 2 == 0 && k % 4 == 2, errc::unexpected_coperiod,
            "psi: doubled image outside the n even, k = 2 mod 4 case");
    const std::size_t half = cls.length() / 2;
    std::vector<std::uint8_t> vbits(cls.canonical().bits().begin(),
                                    cls.canonical().bits().begin() +
                                        static_cast<std::ptrdiff_t>(half));
    BinaryWord root(std::move(vbits));
    require(root.weight() % 2 == 1, errc::unexpected_coperiod,
            "psi: halved word has even weight");
    return PsiResult{Necklace(root, 1), std::move(cycle_word), true};
  }
  std::ostringstream os;
  os << "psi: image co-period " << cls.coperiod() << " outside {1, 2}";
  fail(errc::unexpected_coperiod, os.str());
}

Necklace psi(const Permutation& p, int k) { return psi_detailed(p, k).image; }

namespace {

PsiInverseResult inverse_full(const BinaryWord& w, int n) {
  // All shifts of a primitive word are distinct, so the partial-sum words
  // rank without ties.
  std::vector<BinaryWord> shifts, sums;
  shifts.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    shifts.push_back(w.rotated(static_cast<std::size_t>(j)));
    sums.push_back(partial_sum_word(shifts.back()));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;

  std::vector<RankedShift> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    table.push_back(RankedShift{j + 1, shifts[static_cast<std::size_t>(j)],
                                sums[static_cast<std::size_t>(j)],
                                rank[static_cast<std::size_t>(j)]});
  return PsiInverseResult{cycle_to_permutation(rank), std::move(table)};
}

PsiInverseResult inverse_halved(const BinaryWord& v, int n, int k) {
  const int half = n / 2;
  // w = vv; shifts j and j + n/2 coincide, so the ranking ties in pairs.
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n));
  for (int copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < v.length(); ++i) bits.push_back(v.bit(i));
  BinaryWord w(std::move(bits));

  std::vector<BinaryWord> shifts, sums;
  for (int j = 0; j < n; ++j) {
    shifts.push_back(w.rotated(static_cast<std::size_t>(j)));
    sums.push_back(partial_sum_word(shifts.back()));
  }
  for (int j = 0; j < half; ++j)
    if (!(sums[static_cast<std::size_t>(j)] == sums[static_cast<std::size_t>(j + half)]))
      fail(errc::not_in_domain, "psi_inverse: doubled word shifts failed to tie");

  // Sort the half distinct partial-sum words; the t-th largest pair takes
  // ranks 2t-1 and 2t.
  std::vector<int> order(static_cast<std::size_t>(half));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)];
  });
  std::vector<int> pair_base(static_cast<std::size_t>(half));
  for (int pos = 0; pos < half; ++pos)
    pair_base[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = 2 * pos + 1;

  auto assemble = [&](bool anchor) -> std::vector<int> {
    // orientation[j] true means a_{j+1} < a_{j+1+half} (0-based j).
    std::vector<int> a(static_cast<std::size_t>(n));
    bool orient = anchor;
    for (int j = 0; j < half; ++j) {
      const int base = pair_base[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(j)] = orient ? base : base + 1;
      a[static_cast<std::size_t>(j + half)] = orient ? base + 1 : base;
      orient = orient ^ (w.bit(static_cast<std::size_t>(j)) == 1);
    }
    return a;
  };

  // The two anchor assignments differ by swapping every tied pair, which
  // rotates the cycle word by n/2; as permutations they should coincide.
  // Validate both and demand a unique survivor.
  std::vector<std::pair<std::vector<int>, Permutation>> valid;
  for (bool anchor : {true, false}) {
    std::vector<int> a = assemble(anchor);
    Permutation candidate = cycle_to_permutation(a);
    if (!is_cyclic(candidate) || !shape_ok(candidate, k)) continue;
    bool duplicate = false;
    for (const auto& entry : valid) duplicate = duplicate || entry.second == candidate;
    if (!duplicate) valid.emplace_back(std::move(a), std::move(candidate));
  }
  require(valid.size() == 1, errc::ambiguous_anchor,
          valid.empty() ? "psi_inverse: neither anchor assignment is valid"
                        : "psi_inverse: both anchor assignments are valid and distinct");

  const std::vector<int>& a = valid.front().first;
  std::vector<RankedShift> table;
  for (int j = 0; j < n; ++j)
    table.push_back(RankedShift{j + 1, shifts[static_cast<std::size_t>(j)],
                                sums[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j)]});
  return PsiInverseResult{valid.front().second, std::move(table)};
}

}  // namespace

PsiInverseResult psi_inverse_detailed(const BinaryWord& w, int n, int k) {
  require(n >= 1, errc::invalid_argument, "psi_inverse: n must be positive");
  require(k >= 0 && k <= n, errc::invalid_argument, "psi_inverse: threshold needs 0 <= k <= n");
  // The construction depends only on the necklace class, so any primitive
  // representative is accepted, as in the worked examples.
  if (static_cast<int>(w.length()) == n) {
    require(co_period(w) == 1, errc::not_in_domain, "psi_inverse: word is not primitive");
    require(w.weight() == k, errc::not_in_domain, "psi_inverse: word weight differs from k");
    return inverse_full(w, n);
  }
  if (n % 2 == 0 && k % 4 == 2 && static_cast<int>(w.length()) == n / 2) {
    require(co_period(w) == 1, errc::not_in_domain, "psi_inverse: word is not primitive");
    require(w.weight() == k / 2, errc::not_in_domain,
            "psi_inverse: halved word weight differs from k/2");
    return inverse_halved(w, n, k);
  }
  fail(errc::not_in_domain, "psi_inverse: word length fits neither n nor the halved case");
}

Permutation psi_inverse(const BinaryWord& w, int n, int k) {
  return psi_inverse_detailed(w, n, k).perm;
}

PartitionReport corollary_partition_check(int n) {
  require(n >= 1, errc::invalid_argument, "corollary_partition_check: n must be positive");
  PartitionReport report;
  report.n = n;

  auto run_side = [&](bool odd_side, std::size_t& domain_size, std::size_t& image_size) {
    std::set<std::pair<std::size_t, std::string>> image;  // (length, canonical) keys
    std::size_t domain = 0;
    for (int j = 1; j <= n; ++j) {
      for (const Permutation& p : enumerate_cvp(n, j)) {
        int k;
        if (odd_side) {
          k = j % 2 == 1 ? j : j - 1;
        } else {
          if (j == 1) continue;  // threshold 0 piece is void on the even side
          k = j % 2 == 0 ? j : j - 1;
        }
        ++domain;
        const Necklace img = psi(p, k);
        auto key = std::make_pair(img.length(), img.str());
        if (!image.insert(key).second) {
          std::ostringstream os;
          os << (odd_side ? "odd" : "even") << " side: duplicate image " << img.str()
             << " at n=" << n;
          report.violations.push_back(os.str());
        }
      }
    }
    std::set<std::pair<std::size_t, std::string>> expected;
    for (int k = odd_side ? 1 : 2; k <= n; k += 2) {
      for (const BinaryWord& w : enumerate_lyndon(n, k))
        expected.emplace(w.length(), w.str());
      if (!odd_side && n % 2 == 0 && k % 4 == 2)
        for (const BinaryWord& w : enumerate_lyndon(n / 2, k / 2))
          expected.emplace(w.length(), w.str());
    }
    if (image != expected) {
      std::ostringstream os;
      os << (odd_side ? "odd" : "even") << " side: image differs from expected classes at n="
         << n;
      report.violations.push_back(os.str());
    }
    domain_size = domain;
    image_size = image.size();
  };

  run_side(true, report.odd_domain, report.odd_image);
  run_side(false, report.even_domain, report.even_image);
  return report;
}

BijectionSuiteReport verify_bijection_suite(int max_n) {
  require(max_n >= 1, errc::invalid_argument, "verify_bijection_suite: max_n must be positive");
  BijectionSuiteReport report;
  report.max_n = max_n;
  auto blame = [&](int n, int k, const std::string& what) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << ": " << what;
    report.violations.push_back(os.str());
  };

  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<Permutation> domain;
      for (int j : {k, k + 1})
        if (j >= 1 && j <= n)
          for (const Permutation& p : enumerate_cvp(n, j)) domain.push_back(p);

      std::set<std::pair<std::size_t, std::string>> image, target;
      for (const Permutation& p : domain) {
        ++report.permutations_checked;
        const Necklace img = psi(p, k);
        if (!image.emplace(img.length(), img.str()).second)
          blame(n, k, "psi image repeated on " + p.oneline_str());
        if (!(psi_inverse(img.canonical(), n, k) == p))
          blame(n, k, "inverse does not return " + p.oneline_str());
      }

      std::vector<BinaryWord> expected = enumerate_lyndon(n, k);
      if (n % 2 == 0 && k % 4 == 2)
        for (const BinaryWord& w : enumerate_lyndon(n / 2, k / 2)) expected.push_back(w);
      for (const BinaryWord& w : expected) {
        ++report.words_checked;
        target.emplace(w.length(), w.str());
        const Permutation p = psi_inverse(w, n, k);
        if (!is_cyclic(p)) blame(n, k, "inverse image not cyclic for " + w.str());
        if (!(psi(p, k) == canonical_form(w)))
          blame(n, k, "round trip lost the class of " + w.str());
      }
      if (image != target) blame(n, k, "psi image differs from the augmented Lyndon classes");
    }
    const PartitionReport partition = corollary_partition_check(n);
    for (const std::string& v : partition.violations) report.violations.push_back(v);
  }

  // Worked reference pairs.
  if (max_n >= 5) {
    if (!(psi(Permutation::parse("54213"), 3).str() == std::string("01011")))
      report.violations.push_back("reference pair 54213 <-> (10110) failed forward");
    if (!(psi_inverse(BinaryWord::from_string("10110"), 5, 3) == Permutation::parse("54213")))
      report.violations.push_back("reference pair 54213 <-> (10110) failed backward");
  }
  if (max_n >= 6) {
    if (!(psi(Permutation::parse("651234"), 2).str() == std::string("001")))
      report.violations.push_back("reference pair 651234 <-> (100) failed forward");
    if (!(psi_inverse(BinaryWord::from_string("100"), 6, 2) == Permutation::parse("651234")))
      report.violations.push_back("reference pair 651234 <-> (100) failed backward");
  }
  return report;
}

}  // namespace necksum
