#include "necksum/textio.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace necksum {

namespace {

using OrderedJson = nlohmann::ordered_json;

// Exact values go into JSON as numbers while they fit and as decimal strings
// beyond that, so output stays loss-free.
OrderedJson json_int(const ExactInt& v) {
  static const ExactInt lo = std::numeric_limits<std::int64_t>::min();
  static const ExactInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return OrderedJson(v.convert_to<std::int64_t>());
  return OrderedJson(v.str());
}

std::string ragged_csv(const std::vector<std::vector<ExactInt>>& rows, std::size_t columns) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (c > 0) os << ',';
      if (c < row.size()) os << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string ragged_plain(const std::vector<std::vector<ExactInt>>& rows,
                         const std::string& row_label, const std::string& col_label,
                         std::size_t columns) {
  std::vector<std::vector<std::string>> cells(rows.size());
  std::size_t width = std::max(row_label.size() + 1 + col_label.size(), std::size_t{3});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cells[i].reserve(rows[i].size());
    for (const auto& v : rows[i]) {
      cells[i].push_back(v.str());
      width = std::max(width, cells[i].back().size());
    }
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s) {
    os << std::string(width > s.size() ? width - s.size() : 0, ' ') << s << ' ';
  };
  pad(row_label + "\\" + col_label);
  for (std::size_t c = 0; c < columns; ++c) pad(std::to_string(c));
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pad(std::to_string(i + 1));
    for (const auto& s : cells[i]) pad(s);
    os << '\n';
  }
  return os.str();
}

std::string ragged_json(const std::vector<std::vector<ExactInt>>& rows,
                        const std::string& row_key) {
  OrderedJson out;
  out["rows"] = OrderedJson::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    OrderedJson row;
    row[row_key] = static_cast<std::int64_t>(i + 1);
    OrderedJson values = OrderedJson::array();
    for (const auto& v : rows[i]) values.push_back(json_int(v));
    row["values"] = std::move(values);
    out["rows"].push_back(std::move(row));
  }
  return out.dump() + "\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  fail(errc::invalid_argument, "unknown format: " + name);
}

std::string render_diff_grid(const DiffGrid& grid, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return ragged_csv(grid.rows, static_cast<std::size_t>(grid.m_max) + 1);
    case OutputFormat::json:
      return ragged_json(grid.rows, "m");
    case OutputFormat::plain:
      return ragged_plain(grid.rows, "m", "k", static_cast<std::size_t>(grid.m_max) + 1);
  }
  return {};
}

std::string render_diff_sum(const DiffSumTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return ragged_csv(table.rows, static_cast<std::size_t>(table.n_max) + 1);
    case OutputFormat::json:
      return ragged_json(table.rows, "n");
    case OutputFormat::plain:
      return ragged_plain(table.rows, "n", "r", static_cast<std::size_t>(table.n_max) + 1);
  }
  return {};
}

std::string render_scan_rows(const std::vector<ScanRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    OrderedJson out;
    out["rows"] = OrderedJson::array();
    for (const auto& row : rows) {
      OrderedJson j;
      j["n"] = row.n;
      j["q"] = row.q;
      j["k"] = row.k;
      j["r"] = row.r;
      j["count_multisets"] = row.count_multisets;
      j["count_necklaces"] = row.count_necklaces;
      j["equal"] = row.equal;
      j["conditions"] = row.conditions;
      out["rows"].push_back(std::move(j));
    }
    return out.dump() + "\n";
  }
  // plain and csv share the tabular layout
  std::ostringstream os;
  os << "n,q,k,r,count_multisets,count_necklaces,equal,conditions\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.q << ',' << row.k << ',' << row.r << ',' << row.count_multisets
       << ',' << row.count_necklaces << ',' << (row.equal ? "true" : "false") << ','
       << row.conditions << '\n';
  }
  return os.str();
}

}  // namespace necksum
