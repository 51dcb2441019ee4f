#include "cli/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "smhk/error.hpp"

namespace smhk::cli {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(std::ostream& out, const CsvDocument& doc) {
  for (const std::string& c : doc.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < doc.header.size(); ++i) {
    out << (i ? "," : "") << doc.header[i];
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << format_double(*row[i]);
    }
    out << '\n';
  }
}

std::string to_csv(const CsvDocument& doc) {
  std::ostringstream out;
  write_csv(out, doc);
  return out.str();
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

CsvDocument parse_csv(std::string_view text) {
  CsvDocument doc;
  bool have_header = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;

    if (line.starts_with('#')) {
      if (have_header) throw Error(ErrorKind::kInvalidArgument, "csv comment after header");
      doc.comments.emplace_back(line.substr(line.starts_with("# ") ? 2 : 1));
      continue;
    }
    if (!have_header) {
      for (std::string_view cell : split(line)) doc.header.emplace_back(cell);
      have_header = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != doc.header.size()) {
      throw Error(ErrorKind::kInvalidArgument, "csv row width differs from header");
    }
    std::vector<std::optional<double>> row;
    for (std::string_view cell : cells) {
      if (cell.empty()) {
        row.emplace_back();
        continue;
      }
      const std::string owned(cell);
      char* parsed_end = nullptr;
      const double value = std::strtod(owned.c_str(), &parsed_end);
      if (parsed_end != owned.c_str() + owned.size()) {
        throw Error(ErrorKind::kInvalidArgument, "csv cell '" + owned + "' is not a number");
      }
      row.emplace_back(value);
    }
    doc.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorKind::kInvalidArgument, "csv has no header");
  return doc;
}

Json solution_json(const SmhkParams& params, const AnalyticalSolution& solution,
                   const OracleResult* oracle) {
  Json j;
  j["n"] = params.sets();
  j["k"] = params.stars_per_set();
  j["m"] = params.path_length();
  j["L"] = params.branches();
  j["theta"] = solution.theta;
  j["slem"] = solution.slem;
  j["weights"] = solution.weights.values();
  j["residual"] = solution.residual;
  if (oracle != nullptr) {
    j["oracle_slem"] = oracle->slem;
    j["oracle_weights"] = oracle->weights.values();
  }
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace smhk::cli
