#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "smhk/oracle.hpp"
#include "smhk/weights.hpp"

namespace smhk::cli {

using Json = nlohmann::ordered_json;

// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

// Numeric CSV: '#'-prefixed metadata lines, a header row, then rows whose
// cells are numbers or empty.
struct CsvDocument {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

void write_csv(std::ostream& out, const CsvDocument& doc);
std::string to_csv(const CsvDocument& doc);
// Throws Error(kInvalidArgument) on malformed input.
CsvDocument parse_csv(std::string_view text);

Json solution_json(const SmhkParams& params, const AnalyticalSolution& solution,
                   const OracleResult* oracle = nullptr);
std::string dump_json(const Json& j);

}  // namespace smhk::cli
