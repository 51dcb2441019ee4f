#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace smhk::cli {

struct IntRange {
  int first = 0;
  int last = 0;

  std::vector<int> values() const;
  std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// "n=2..6,k=2..5" or "n=3,m=1..3". Names must come from `allowed`;
// throws Error(kInvalidArgument) on malformed input, unknown or repeated
// names, and reversed ranges.
std::map<std::string, IntRange> parse_grid(std::string_view spec,
                                           const std::vector<std::string>& allowed);

}  // namespace smhk::cli
