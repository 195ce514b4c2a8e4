#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "basla/dataset.hpp"

namespace basla {

class CsvError : public DataError {
 public:
  enum class Kind { MissingFile, MissingColumn, EmptyColumn, NonNumericCell };

  CsvError(Kind kind, const std::string& what, std::size_t row = 0)
      : DataError(what), kind_(kind), row_(row) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based file line of the offending cell, 0 when not applicable.
  std::size_t row() const noexcept { return row_; }

 private:
  Kind kind_;
  std::size_t row_;
};

/// 1-based column index or header name.
using ColumnSelector = std::variant<std::size_t, std::string>;

/// "5" selects the fifth column; anything non-numeric names a header.
ColumnSelector parse_column_selector(const std::string& text);

/// Reads one numeric column of a comma-separated file. A first row whose
/// selected cell is not numeric is taken as the header; any later
/// non-numeric cell is an error naming its line. Blank lines are skipped.
Dataset ingest_csv(const std::filesystem::path& path, const ColumnSelector& column);

}  // namespace basla
