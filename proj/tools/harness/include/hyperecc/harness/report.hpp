#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperecc::harness {

/// Named columns plus string rows; rendered as TSV or space-aligned text.
class ReportTable {
 public:
  ReportTable() = default;
  explicit ReportTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<std::string> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  /// Cell lookup by column name; throws std::out_of_range when absent.
  const std::string& cell(std::size_t row, const std::string& column) const;

  void write_tsv(std::ostream& out) const;
  void write_pretty(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_fixed(double value, int digits);

}  // namespace hyperecc::harness
