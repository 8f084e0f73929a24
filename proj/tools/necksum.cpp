// Command-line front end: counting, enumeration, the permutation/necklace
// correspondence, table generation, verification sweeps and the q-ary
// scanner. All numbers come straight from the library; this file only
// parses arguments and formats output.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "necksum/bijection.hpp"
#include "necksum/identities.hpp"
#include "necksum/parallel.hpp"
#include "necksum/perms.hpp"
#include "necksum/qary.hpp"
#include "necksum/subsets.hpp"
#include "necksum/textio.hpp"
#include "necksum/words.hpp"

namespace {

using necksum::ExactInt;
using OrderedJson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct GlobalOptions {
  std::string format = "plain";
  int jobs = 1;
  bool zero_based = false;
};

OrderedJson json_int(const ExactInt& v) {
  static const ExactInt lo = std::numeric_limits<std::int64_t>::min();
  static const ExactInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return OrderedJson(v.convert_to<std::int64_t>());
  return OrderedJson(v.str());
}

std::int64_t required(const std::optional<std::int64_t>& value, const char* name) {
  if (!value)
    necksum::fail(necksum::errc::invalid_argument, std::string("missing --") + name);
  return *value;
}

// ---------------------------------------------------------------------------
// count

ExactInt dispatch_count(const std::string& family, std::int64_t n,
                        std::optional<std::int64_t> k, std::optional<std::int64_t> r) {
  using namespace necksum;
  if (family == "necklaces") return k ? count_necklaces(n, *k) : count_necklaces_total(n);
  if (family == "lyndon") return k ? count_lyndon(n, *k) : count_lyndon_total(n);
  if (family == "coperiod") {
    const std::int64_t rr = required(r, "r");
    if (k) return count_coperiod_div(n, *k, rr);
    ExactInt total = 0;
    for (std::int64_t kk = 0; kk <= n; ++kk) total += count_coperiod_div(n, kk, rr);
    return total;
  }
  if (family == "lplus") {
    if (k) return count_lplus(n, *k);
    ExactInt total = 0;
    for (std::int64_t kk = 0; kk <= n; ++kk) total += count_lplus(n, kk);
    return total;
  }
  if (family == "sbar") {
    const std::int64_t rr = required(r, "r");
    if (k) return count_sbar(n, *k, rr);
    ExactInt total = 0;
    for (std::int64_t kk = 0; kk <= n; ++kk) total += count_sbar(n, kk, rr);
    return total;
  }
  if (family == "s") {
    const std::int64_t rr = required(r, "r");
    if (k) return count_s_short(n, *k, rr);
    ExactInt total = 0;
    for (std::int64_t kk = 0; kk <= n - 1; ++kk) total += count_s_short(n, kk, rr);
    return total;
  }
  if (family == "cvp") {
    if (k) return count_cvp(n, *k);
    ExactInt total = 0;
    for (std::int64_t kk = 1; kk <= n; ++kk) total += count_cvp(n, kk);
    return total;
  }
  necksum::fail(necksum::errc::invalid_argument, "unknown family: " + family);
}

void run_count(const GlobalOptions& global, const std::string& family, std::int64_t n,
               std::optional<std::int64_t> k, std::optional<std::int64_t> r) {
  const ExactInt value = dispatch_count(family, n, k, r);
  const necksum::OutputFormat format = necksum::parse_format(global.format);
  if (format == necksum::OutputFormat::json) {
    OrderedJson out;
    out["family"] = family;
    out["n"] = n;
    if (k) out["k"] = *k;
    if (r) out["r"] = *r;
    out["value"] = json_int(value);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

// ---------------------------------------------------------------------------
// enumerate

struct Listing {
  std::vector<std::string> plain;             // display form
  std::vector<std::vector<std::string>> csv;  // fields per item
  OrderedJson json = OrderedJson::array();
};

void add_word(Listing& listing, const std::string& text) {
  listing.plain.push_back(text);
  listing.csv.push_back({text});
  listing.json.push_back(text);
}

void add_subset(Listing& listing, const necksum::ResidueSubset& s, bool zero_based) {
  listing.plain.push_back(s.str(zero_based));
  std::vector<std::string> fields;
  OrderedJson values = OrderedJson::array();
  std::vector<std::int64_t> shown = s.elements();
  if (zero_based) {
    for (auto& e : shown)
      if (e == s.modulus()) e = 0;
    std::sort(shown.begin(), shown.end());
  }
  for (std::int64_t e : shown) {
    fields.push_back(std::to_string(e));
    values.push_back(e);
  }
  listing.csv.push_back(std::move(fields));
  listing.json.push_back(std::move(values));
}

void add_perm(Listing& listing, const necksum::Permutation& p) {
  listing.plain.push_back(p.oneline_str());
  std::vector<std::string> fields;
  OrderedJson values = OrderedJson::array();
  for (int v : p.oneline()) {
    fields.push_back(std::to_string(v));
    values.push_back(v);
  }
  listing.csv.push_back(std::move(fields));
  listing.json.push_back(std::move(values));
}

void run_enumerate(const GlobalOptions& global, const std::string& family, std::int64_t n,
                   std::optional<std::int64_t> k_opt, std::optional<std::int64_t> r) {
  using namespace necksum;
  const std::int64_t k = required(k_opt, "k");
  Listing listing;
  if (family == "necklaces") {
    for (const Necklace& x : enumerate_necklaces(n, k)) add_word(listing, x.str());
  } else if (family == "lyndon") {
    for (const BinaryWord& x : enumerate_lyndon(n, k)) add_word(listing, x.str());
  } else if (family == "coperiod") {
    for (const Necklace& x : enumerate_coperiod_div(n, k, required(r, "r")))
      add_word(listing, x.str());
  } else if (family == "lplus") {
    for (const BinaryWord& x : enumerate_lyndon(n, k)) add_word(listing, x.str());
    if (n % 2 == 0 && k % 4 == 2)
      for (const BinaryWord& x : enumerate_lyndon(n / 2, k / 2)) add_word(listing, x.str());
  } else if (family == "sbar") {
    for (const ResidueSubset& x : enumerate_subsets(n, k, required(r, "r"), Universe::Full))
      add_subset(listing, x, global.zero_based);
  } else if (family == "s") {
    for (const ResidueSubset& x : enumerate_subsets(n, k, required(r, "r"), Universe::Short))
      add_subset(listing, x, global.zero_based);
  } else if (family == "cvp") {
    for (const Permutation& x : enumerate_cvp(n, k)) add_perm(listing, x);
  } else {
    fail(errc::invalid_argument, "unknown family: " + family);
  }

  switch (parse_format(global.format)) {
    case OutputFormat::plain:
      for (const auto& line : listing.plain) std::cout << line << "\n";
      std::cout << "count: " << listing.plain.size() << "\n";
      break;
    case OutputFormat::csv:
      for (const auto& fields : listing.csv) {
        for (std::size_t i = 0; i < fields.size(); ++i)
          std::cout << (i ? "," : "") << fields[i];
        std::cout << "\n";
      }
      break;
    case OutputFormat::json: {
      OrderedJson out;
      out["items"] = listing.json;
      out["count"] = listing.plain.size();
      std::cout << out.dump() << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// bijection

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string buf = text;
  for (auto& c : buf)
    if (c == ',') c = ' ';
  std::istringstream is(buf);
  std::int64_t v;
  while (is >> v) out.push_back(v);
  if (!is.eof())
    necksum::fail(necksum::errc::invalid_argument, "could not parse integer list: " + text);
  return out;
}

void print_rank_table(const std::vector<necksum::RankedShift>& table) {
  for (const auto& row : table)
    std::cout << "shift " << row.index << ": " << row.shifted.str() << "  partial-sums "
              << row.partial_sum.str() << "  rank " << row.rank << "\n";
}

void run_bijection(const GlobalOptions& global, const std::string& direction,
                   const std::string& perm_text, const std::string& word_text,
                   std::optional<std::int64_t> n_opt, std::optional<std::int64_t> k_opt,
                   const std::string& set_text, std::optional<std::int64_t> y_opt,
                   std::optional<std::int64_t> z_opt, bool show_table) {
  using namespace necksum;
  const OutputFormat format = parse_format(global.format);

  if (direction == "psi") {
    require(!perm_text.empty(), errc::invalid_argument, "psi needs --perm");
    const Permutation p = Permutation::parse(perm_text);
    const int k = static_cast<int>(required(k_opt, "k"));
    const PsiResult result = psi_detailed(p, k);
    if (format == OutputFormat::json) {
      OrderedJson out;
      out["image"] = result.image.str();
      out["cycle_word"] = result.cycle_word.str();
      out["halved"] = result.halved;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << result.image.str() << "\n";
      if (format == OutputFormat::plain)
        std::cout << "cycle word: " << result.cycle_word.str()
                  << (result.halved ? " (halved)" : "") << "\n";
    }
    return;
  }

  if (direction == "psi-inverse") {
    require(!word_text.empty(), errc::invalid_argument, "psi-inverse needs --word");
    const BinaryWord w = BinaryWord::from_string(word_text);
    const int n = static_cast<int>(required(n_opt, "n"));
    const int k = static_cast<int>(required(k_opt, "k"));
    const PsiInverseResult result = psi_inverse_detailed(w, n, k);
    if (format == OutputFormat::json) {
      OrderedJson out;
      out["perm"] = result.perm.oneline_str();
      out["cycles"] = result.perm.cycle_str();
      if (show_table) {
        OrderedJson table = OrderedJson::array();
        for (const auto& row : result.table) {
          OrderedJson j;
          j["index"] = row.index;
          j["shift"] = row.shifted.str();
          j["partial_sum"] = row.partial_sum.str();
          j["rank"] = row.rank;
          table.push_back(std::move(j));
        }
        out["table"] = std::move(table);
      }
      std::cout << out.dump() << "\n";
    } else {
      std::cout << result.perm.oneline_str() << "\n";
      if (format == OutputFormat::plain && show_table) print_rank_table(result.table);
    }
    return;
  }

  if (direction == "affine") {
    require(!set_text.empty(), errc::invalid_argument, "affine needs --set");
    const std::int64_t n = required(n_opt, "n");
    std::vector<std::int64_t> elements = parse_int_list(set_text);
    for (auto& e : elements)
      if (e == 0) e = n;  // accept the 0-based spelling of n
    std::sort(elements.begin(), elements.end());
    const ResidueSubset input(n, std::move(elements));
    const ResidueSubset image =
        affine_bijection(input, required(y_opt, "y"), required(z_opt, "z"));
    if (format == OutputFormat::json) {
      OrderedJson out;
      OrderedJson values = OrderedJson::array();
      for (std::int64_t e : image.elements()) values.push_back(e);
      out["image"] = std::move(values);
      out["residue"] = image.residue();
      std::cout << out.dump() << "\n";
    } else {
      std::cout << image.str(global.zero_based) << "\n";
    }
    return;
  }

  necksum::fail(necksum::errc::invalid_argument, "unknown direction: " + direction);
}

// ---------------------------------------------------------------------------
// table

void run_table(const GlobalOptions& global, const std::string& which, std::int64_t r,
               std::int64_t max_m, std::int64_t max_n) {
  using namespace necksum;
  const OutputFormat format = parse_format(global.format);
  if (which == "diff-grid") {
    std::cout << render_diff_grid(table_diff_grid(r, max_m, global.jobs), format);
  } else if (which == "diff-sum") {
    std::cout << render_diff_sum(table_diff_sum(max_n, global.jobs), format);
  } else {
    fail(errc::invalid_argument, "unknown table: " + which);
  }
}

// ---------------------------------------------------------------------------
// verify

int report_lines(const std::string& name, std::int64_t checked,
                 const std::vector<std::string>& violations) {
  if (violations.empty()) {
    std::cout << "ok " << name << " (" << checked << " checks)\n";
    return 0;
  }
  std::cout << "FAIL " << name << " (" << violations.size() << " violations out of " << checked
            << " checks)\n";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == 20) {
      std::cout << "  ...\n";
      break;
    }
    std::cout << "  " << v << "\n";
  }
  return 1;
}

int verify_theorem(std::int64_t max_n, bool deep, int jobs) {
  const necksum::SweepReport sweep = necksum::verify_equality_sweep(max_n, deep, jobs);
  return report_lines(deep ? "equality sweep (formulas and enumeration)"
                           : "equality sweep (formulas)",
                      sweep.cells_checked, sweep.violations);
}

int verify_s1cvp(std::int64_t max_n) {
  using namespace necksum;
  std::vector<std::string> violations;
  std::int64_t checked = 0;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    ++checked;
    if (!(s1_short_poly(n) == thibon_poly(n)))
      violations.push_back("generating polynomials differ at n=" + std::to_string(n));
    for (std::int64_t k = 1; k <= n; ++k) {
      ++checked;
      if (count_s_short(n, k - 1, 1 % n) != count_cvp(n, k))
        violations.push_back("subset/permutation counts differ at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
    }
  }
  return report_lines("subset counts vs cyclic V-shaped counts", checked, violations);
}

int verify_bijection(std::int64_t max_n) {
  const necksum::BijectionSuiteReport report =
      necksum::verify_bijection_suite(static_cast<int>(max_n));
  return report_lines("psi round trips and images",
                      report.permutations_checked + report.words_checked, report.violations);
}

int verify_corollaries(std::int64_t max_n) {
  const necksum::CorollaryReport report = necksum::corollary_reports(max_n);
  return report_lines("special-case corollaries", report.cells_checked, report.violations);
}

int verify_chan(std::int64_t bound) {
  using namespace necksum;
  std::vector<std::string> violations;
  std::int64_t checked = 0;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t q = 2; n * q <= bound; ++q) {
      if (std::gcd(n, q) != 1) continue;
      ++checked;
      const ChanReport report = chan_total_check(n, q);
      if (!report.equal)
        violations.push_back("totals differ at n=" + std::to_string(n) +
                             " q=" + std::to_string(q));
    }
  }
  // Binary slice of the scanner against the equality conditions.
  for (const ScanRow& row : scan_equality(8, 2, 16)) {
    ++checked;
    const bool predicted = !equality_conditions(row.n, row.k, row.r).empty();
    if (row.equal != predicted)
      violations.push_back("scanner disagrees with conditions at n=" + std::to_string(row.n) +
                           " k=" + std::to_string(row.k) + " r=" + std::to_string(row.r));
  }
  return report_lines("bounded multiset vs necklace totals", checked, violations);
}

int run_verify(const GlobalOptions& global, const std::string& suite,
               std::optional<std::int64_t> max_n, bool deep) {
  int failures = 0;
  if (suite == "all" || suite == "theorem")
    failures += verify_theorem(max_n.value_or(16), deep, global.jobs);
  if (suite == "all" || suite == "s1cvp") failures += verify_s1cvp(max_n.value_or(30));
  if (suite == "all" || suite == "bijection") failures += verify_bijection(max_n.value_or(10));
  if (suite == "all" || suite == "corollaries")
    failures += verify_corollaries(max_n.value_or(12));
  if (suite == "all" || suite == "chan") failures += verify_chan(max_n.value_or(40));
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts, enumerations and cross-checks for binary necklaces, "
               "subset sums modulo n and cyclic V-shaped permutations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", global.jobs,
                 "worker threads for grids and sweeps (1 = serial, 0 = all cores)")
      ->capture_default_str();
  app.add_flag("--zero-based", global.zero_based,
               "render subsets over {0,...,n-1} with n printed as 0");

  static const std::vector<std::string> families = {"necklaces", "lyndon", "coperiod", "lplus",
                                                    "sbar",      "s",      "cvp"};

  std::string family, direction, which, suite;
  std::optional<std::int64_t> n_opt, k_opt, r_opt, y_opt, z_opt, max_n_opt;
  std::int64_t table_r = 2, max_m = 19, max_n_table = 20;
  std::int64_t scan_n = 8, scan_q = 4, scan_k = std::numeric_limits<std::int64_t>::max();
  std::string perm_text, word_text, set_text;
  bool show_table = false, deep = false;

  CLI::App* count = app.add_subcommand("count", "print one exact cardinality");
  count->add_option("family", family)->required()->check(CLI::IsMember(families));
  count->add_option("--n", n_opt)->required();
  count->add_option("--k", k_opt);
  count->add_option("--r", r_opt);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a family in canonical order");
  enumerate->add_option("family", family)->required()->check(CLI::IsMember(families));
  enumerate->add_option("--n", n_opt)->required();
  enumerate->add_option("--k", k_opt);
  enumerate->add_option("--r", r_opt);

  CLI::App* bijection = app.add_subcommand("bijection", "apply the explicit correspondences");
  bijection->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"psi", "psi-inverse", "affine"}));
  bijection->add_option("--perm", perm_text, "one-line permutation, e.g. 54213");
  bijection->add_option("--word", word_text, "bit string, e.g. 10110");
  bijection->add_option("--set", set_text, "comma separated subset, e.g. 3,5,6");
  bijection->add_option("--n", n_opt);
  bijection->add_option("--k", k_opt);
  bijection->add_option("--y", y_opt);
  bijection->add_option("--z", z_opt);
  bijection->add_flag("--show-table", show_table, "print the shift ranking table");

  CLI::App* table = app.add_subcommand("table", "generate the difference tables");
  table->add_option("which", which)->required()->check(CLI::IsMember({"diff-grid", "diff-sum"}));
  table->add_option("--r", table_r, "residue for diff-grid")->capture_default_str();
  table->add_option("--max-m", max_m, "diff-grid rows")->capture_default_str();
  table->add_option("--max-n", max_n_table, "diff-sum rows")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"all", "theorem", "s1cvp", "bijection", "corollaries", "chan"}));
  verify->add_option("--max-n", max_n_opt, "sweep bound (suite-specific default)");
  verify->add_flag("--deep", deep, "add the enumeration tier to the theorem sweep");

  CLI::App* scan = app.add_subcommand("scan-qary", "equality evidence over q-ary alphabets");
  scan->add_option("--max-n", scan_n)->capture_default_str();
  scan->add_option("--max-q", scan_q)->capture_default_str();
  scan->add_option("--max-k", scan_k, "cap on the entry sum (defaults to n(q-1))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      run_count(global, family, required(n_opt, "n"), k_opt, r_opt);
    } else if (enumerate->parsed()) {
      run_enumerate(global, family, required(n_opt, "n"), k_opt, r_opt);
    } else if (bijection->parsed()) {
      run_bijection(global, direction, perm_text, word_text, n_opt, k_opt, set_text, y_opt,
                    z_opt, show_table);
    } else if (table->parsed()) {
      run_table(global, which, table_r, max_m, max_n_table);
    } else if (verify->parsed()) {
      return run_verify(global, suite, max_n_opt, deep);
    } else if (scan->parsed()) {
      const auto rows = necksum::scan_equality(scan_n, scan_q, scan_k, global.jobs);
      std::cout << necksum::render_scan_rows(rows, necksum::parse_format(global.format));
    }
  } catch (const necksum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == necksum::errc::invalid_argument ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
