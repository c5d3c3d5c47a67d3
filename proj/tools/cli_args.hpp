#pragma once

// Argument helpers for the qspivey CLI. Every numeric flag is a nonnegative
// integer; verify flags also take inclusive ranges "lo..hi".

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace qspivey::cli {

/// Raised for invalid flags or flag combinations; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  unsigned long lo = 0;
  unsigned long hi = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

inline unsigned long parse_uint(std::string_view text, std::string_view flag) {
  unsigned long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(flag) + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

inline Range parse_range(std::string_view text, std::string_view flag) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned long v = parse_uint(text, flag);
    return {v, v};
  }
  Range r{parse_uint(text.substr(0, dots), flag), parse_uint(text.substr(dots + 2), flag)};
  if (r.lo > r.hi) throw UsageError(std::string(flag) + ": empty range '" + std::string(text) + "'");
  return r;
}

}  // namespace qspivey::cli
