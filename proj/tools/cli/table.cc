// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/table.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace muc::cli {
namespace {

std::string Escape(const std::string& cell, TableFormat format) {
  if (format == TableFormat::kTsv) {
    std::string out = cell;
    std::replace(out.begin(), out.end(), '\t', ' ');
    std::replace(out.begin(), out.end(), '\n', ' ');
    return out;
  }
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteRow(std::ostream& out, const std::vector<std::string>& row,
              TableFormat format) {
  const char sep = format == TableFormat::kCsv ? ',' : '\t';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out << sep;
    out << Escape(row[i], format);
  }
  out << '\n';
}

}  // namespace

void Table::AddRow(std::vector<std::string> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("row width does not match the header");
  }
  rows_.push_back(std::move(row));
}


void Table::Write(std::ostream& out, TableFormat format,
                  const std::vector<std::string>& comments) const {
  for (const auto& comment : comments) out << "# " << comment << '\n';
  WriteRow(out, columns_, format);
  for (const auto& row : rows_) WriteRow(out, row, format);
}

std::string FormatDouble(double value, int precision) {
  if (std::isnan(value)) return "";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out.precision(precision);
  out << value;
  return out.str();
}

std::string JoinIds(const std::vector<unsigned>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace muc::cli
