#include "auger/table.hpp"

#include <fstream>
#include <sstream>

#include "auger/config.hpp"
#include "auger/errors.hpp"

namespace auger {
namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw ValidationError("table row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(header_.size()));
  }
  rows_.push_back(std::move(cells));
}

void Table::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  add_row(std::move(cells));
}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw ValidationError("table has no column '" + std::string(name) + "'");
}

bool Table::has_column(std::string_view name) const {
  for (const auto& h : header_) {
    if (h == name) return true;
  }
  return false;
}

const std::string& Table::cell(std::size_t row, std::string_view column) const {
  return rows_.at(row)[column_index(column)];
}

double Table::number(std::size_t row, std::string_view column) const {
  return parse_double(cell(row, column), column);
}

std::vector<double> Table::numeric_column(std::string_view name) const {
  const auto idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(parse_double(r[idx], name));
  return out;
}

std::string Table::to_csv() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return out;
}

Table Table::from_csv(std::string_view text) {
  Table t;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!have_header) {
      t.header_ = split_line(line);
      have_header = true;
    } else {
      t.add_row(split_line(line));
    }
  }
  if (!have_header) throw ValidationError("table text has no header row");
  return t;
}

void Table::save(const std::filesystem::path& path) const { write_file_atomic(path, to_csv()); }

Table Table::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open table " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_csv(ss.str());
}

}  // namespace auger
