#pragma once

#include <stdexcept>
#include <string>

namespace necksum {

// Error conditions surfaced through Error::name(); the CLI maps
// invalid_argument to exit code 2 and everything else to exit code 3.
enum class errc {
  invalid_argument,
  non_exact_division,
  not_coprime,
  search_exhausted,
  z_not_coprime,
  not_cyclic,
  shape_violation,
  unexpected_coperiod,
  not_in_domain,
  ambiguous_anchor,
  gcd_not_one,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool condition, errc code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

}  // namespace necksum
