// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_TSV_HPP
#define ASRBENCH_TSV_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench::tsv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by header name, -1 when absent.
  int column(std::string_view name) const;
  // Cell by header name; empty string when the column is absent or short.
  const std::string& cell(size_t row, std::string_view name) const;
};

// Splits one line on tabs. No quoting: cells must not contain tabs/newlines.
std::vector<std::string> split_line(std::string_view line);

std::string join_line(const std::vector<std::string>& cells);

// Reads a headered TSV. Lines starting with '#' and blank lines are skipped
// when skip_comments is set (lexicon files use them). Throws IoError when
// the file cannot be read.
Table read_file(const std::filesystem::path& path, bool skip_comments = false);

std::string to_string(const Table& table);

}  // namespace asrbench::tsv

#endif  // ASRBENCH_TSV_HPP
