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

#include "muc/instance_io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <utility>

#include "muc/errors.h"

namespace muc {
namespace {

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::uint64_t> ParseNumbers(std::string_view line,
                                        std::size_t line_number) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin ||
        (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_number, "expected a non-negative integer near '" +
                                        std::string(line.substr(pos, 16)) +
                                        "'");
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

InstanceStreamReader::InstanceStreamReader(std::istream& in) : in_(in) {
  std::string line;
  while (true) {
    if (!std::getline(in_, line)) {
      throw ParseError(line_number_, "missing 'n m k' header");
    }
    ++line_number_;
    if (!line.empty() && line[0] == '#') {
      comments_.push_back(line.substr(1));
      continue;
    }
    if (IsBlank(line)) continue;
    break;
  }
  const auto values = ParseNumbers(line, line_number_);
  if (values.size() != 3) {
    throw ParseError(line_number_, "header must be exactly 'n m k'");
  }
  header_.n = values[0];
  header_.m = values[1];
  header_.k = values[2];
  if (header_.n > std::numeric_limits<Element>::max()) {
    throw ParseError(line_number_, "n exceeds 32-bit element ids");
  }
  if (header_.k < 1 || header_.k > header_.m) {
    throw ParseError(line_number_, "k must satisfy 1 <= k <= m");
  }
}

bool InstanceStreamReader::ReadLine(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line[0] == '#') continue;
    return true;
  }
  return false;
}

std::optional<StreamedSet> InstanceStreamReader::Next() {
  std::string line;
  if (next_id_ >= header_.m) {
    while (ReadLine(line)) {
      if (!IsBlank(line)) {
        throw ParseError(line_number_, "more than m set lines");
      }
    }
    return std::nullopt;
  }
  if (!ReadLine(line)) {
    throw ParseError(line_number_, "expected " + std::to_string(header_.m) +
                                       " set lines, found " +
                                       std::to_string(next_id_));
  }
  StreamedSet out;
  out.id = next_id_++;
  const auto values = ParseNumbers(line, line_number_);
  out.elements.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > header_.n) {
      throw ParseError(line_number_, "element " + std::to_string(values[i]) +
                                         " outside [1, n]");
    }
    if (i > 0 && values[i - 1] >= values[i]) {
      throw ParseError(line_number_, "elements must be strictly increasing");
    }
    out.elements.push_back(static_cast<Element>(values[i]));
  }
  return out;
}

SetSystem ParseInstance(std::istream& in) {
  InstanceStreamReader reader(in);
  std::vector<ElementSet> sets;
  sets.reserve(reader.header().m);
  while (auto s = reader.Next()) sets.push_back(std::move(s->elements));
  return SetSystem(reader.header().n, std::move(sets), reader.header().k);
}

SetSystem ParseInstanceString(const std::string& text) {
  std::istringstream in(text);
  return ParseInstance(in);
}

SetSystem ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return ParseInstance(in);
}

void WriteInstance(std::ostream& out, const SetSystem& system,
                   const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << system.universe_size() << ' ' << system.num_sets() << ' '
      << system.k() << '\n';
  for (const auto& set : system.sets()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out << ' ';
      out << set[i];
    }
    out << '\n';
  }
}

std::string FormatInstance(const SetSystem& system,
                           const std::vector<std::string>& comments) {
  std::ostringstream out;
  WriteInstance(out, system, comments);
  return out.str();
}

}  // namespace muc
