#include "cli/grid.hpp"

#include <algorithm>
#include <charconv>

#include "smhk/error.hpp"

namespace smhk::cli {

namespace {

[[noreturn]] void fail(std::string_view spec, const std::string& why) {
  throw Error(ErrorKind::kInvalidArgument,
              "bad --grid '" + std::string(spec) + "': " + why);
}

int parse_int(std::string_view spec, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(spec, "'" + std::string(text) + "' is not an integer");
  }
  return value;
}

}  // namespace

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = first; v <= last; ++v) out.push_back(v);
  return out;
}

std::map<std::string, IntRange> parse_grid(std::string_view spec,
                                           const std::vector<std::string>& allowed) {
  std::map<std::string, IntRange> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string_view item = spec.substr(start, comma - start);
    start = comma + 1;

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) fail(spec, "expected name=a..b");
    const std::string name(item.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      fail(spec, "unknown name '" + name + "'");
    }
    if (out.contains(name)) fail(spec, "'" + name + "' given twice");

    const std::string_view range = item.substr(eq + 1);
    const std::size_t dots = range.find("..");
    IntRange r;
    if (dots == std::string_view::npos) {
      r.first = r.last = parse_int(spec, range);
    } else {
      r.first = parse_int(spec, range.substr(0, dots));
      r.last = parse_int(spec, range.substr(dots + 2));
    }
    if (r.first > r.last) fail(spec, "range for '" + name + "' is reversed");
    out[name] = r;
    if (comma == spec.size()) break;
  }
  return out;
}

}  // namespace smhk::cli
