#include "basla/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <vector>

namespace basla {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

}  // namespace

ColumnSelector parse_column_selector(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto index = std::stoul(t);
    if (index == 0) throw std::invalid_argument("column index is 1-based");
    return static_cast<std::size_t>(index);
  }
  return t;
}

Dataset ingest_csv(const std::filesystem::path& path, const ColumnSelector& column) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError(CsvError::Kind::MissingFile, "cannot open data file '" + path.string() + "'");
  }

  std::optional<std::size_t> index;
  if (const auto* i = std::get_if<std::size_t>(&column)) index = *i - 1;
  const auto* name = std::get_if<std::string>(&column);

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_row(line);
    if (first_row) {
      first_row = false;
      if (name) {
        const auto it = std::find_if(cells.begin(), cells.end(),
                                     [&](const std::string& c) { return trim(c) == *name; });
        if (it == cells.end()) {
          throw CsvError(CsvError::Kind::MissingColumn,
                         "no column named '" + *name + "' in header of '" + path.string() + "'",
                         line_no);
        }
        index = static_cast<std::size_t>(it - cells.begin());
        continue;
      }
      if (*index < cells.size() && !parse_number(cells[*index])) continue;  // header
    }
    if (*index >= cells.size()) {
      throw CsvError(CsvError::Kind::MissingColumn,
                     "row " + std::to_string(line_no) + " has only " +
                         std::to_string(cells.size()) + " columns",
                     line_no);
    }
    const auto v = parse_number(cells[*index]);
    if (!v || !std::isfinite(*v)) {
      throw CsvError(CsvError::Kind::NonNumericCell,
                     "row " + std::to_string(line_no) + ": non-numeric cell '" +
                         trim(cells[*index]) + "'",
                     line_no);
    }
    values.push_back(*v);
  }
  if (values.empty()) {
    throw CsvError(CsvError::Kind::EmptyColumn, "empty column in '" + path.string() + "'");
  }
  return Dataset(path.stem().string(), std::move(values), "csv:" + path.string());
}

}  // namespace basla
