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

#ifndef MUC_TOOLS_CLI_TABLE_H_
#define MUC_TOOLS_CLI_TABLE_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace muc::cli {

enum class TableFormat { kCsv, kTsv };

// A header plus rows of already formatted cells.
class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void AddRow(std::vector<std::string> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  // Comment lines are written first, each prefixed with "# ".
  void Write(std::ostream& out, TableFormat format,
             const std::vector<std::string>& comments = {}) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string FormatDouble(double value, int precision = 6);
std::string JoinIds(const std::vector<unsigned>& ids);

}  // namespace muc::cli

#endif  // MUC_TOOLS_CLI_TABLE_H_
