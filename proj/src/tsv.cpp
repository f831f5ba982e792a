// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/tsv.hpp"

#include <fstream>
#include <sstream>

#include "asrbench/errors.hpp"

namespace asrbench::tsv {

namespace {
const std::string kEmpty;
}

int Table::column(std::string_view name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

const std::string& Table::cell(size_t row, std::string_view name) const {
  int c = column(name);
  if (c < 0 || row >= rows.size()) return kEmpty;
  const auto& r = rows[row];
  if (static_cast<size_t>(c) >= r.size()) return kEmpty;
  return r[static_cast<size_t>(c)];
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      break;
    }
    cells.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

std::string join_line(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back('\t');
    out += cells[i];
  }
  return out;
}

Table read_file(const std::filesystem::path& path, bool skip_comments) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read TSV file: " + path.string());
  Table table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_comments && (line.empty() || line[0] == '#')) continue;
    if (!have_header) {
      table.header = split_line(line);
      have_header = true;
    } else {
      if (line.empty()) continue;
      table.rows.push_back(split_line(line));
    }
  }
  return table;
}

std::string to_string(const Table& table) {
  std::ostringstream out;
  out << join_line(table.header) << '\n';
  for (const auto& row : table.rows) out << join_line(row) << '\n';
  return out.str();
}

}  // namespace asrbench::tsv
