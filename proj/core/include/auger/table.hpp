#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace auger {

/// Comma-delimited text table with a header row. Cells are kept as text;
/// numbers are written with 17 significant digits so a write/read cycle is
/// lossless.
class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t columns() const { return header_.size(); }
  bool empty() const { return rows_.empty(); }

  void add_row(std::vector<std::string> cells);
  void add_row(const std::vector<double>& values);

  std::size_t column_index(std::string_view name) const;
  bool has_column(std::string_view name) const;
  const std::string& cell(std::size_t row, std::string_view column) const;
  double number(std::size_t row, std::string_view column) const;
  std::vector<double> numeric_column(std::string_view name) const;

  std::string to_csv() const;
  static Table from_csv(std::string_view text);

  void save(const std::filesystem::path& path) const;
  static Table load(const std::filesystem::path& path);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace auger
