#pragma once

#include <string>
#include <vector>

#include "necksum/identities.hpp"
#include "necksum/qary.hpp"

namespace necksum {

enum class OutputFormat { plain, csv, json };

OutputFormat parse_format(const std::string& name);

// CSV dialect: comma separator, LF line endings, no quoting, empty cell for
// grid entries outside the row's range. CSV and JSON are byte-deterministic;
// plain output is aligned for reading and carries no stability promise.
std::string render_diff_grid(const DiffGrid& grid, OutputFormat format);
std::string render_diff_sum(const DiffSumTable& table, OutputFormat format);

// Header row n,q,k,r,count_multisets,count_necklaces,equal,conditions.
std::string render_scan_rows(const std::vector<ScanRow>& rows, OutputFormat format);

}  // namespace necksum
