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

#ifndef MUC_INSTANCE_IO_H_
#define MUC_INSTANCE_IO_H_

// Instance text format:
//
//   # comment lines may appear anywhere
//   n m k
//   <sorted element ids of set 0>
//   ...
//   <sorted element ids of set m-1>
//
// An empty line is an empty set. Trailing blank lines are ignored.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "muc/setsys.h"

namespace muc {

struct InstanceHeader {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
};

struct StreamedSet {
  SetId id = 0;
  ElementSet elements;
};

// Reads an instance one set at a time without holding earlier sets.
// Throws ParseError (with the offending line number) on malformed input.
class InstanceStreamReader {
 public:
  explicit InstanceStreamReader(std::istream& in);

  const InstanceHeader& header() const { return header_; }
  // The comment lines seen before the header, without the leading '#'.
  const std::vector<std::string>& leading_comments() const {
    return comments_;
  }

  // Next set in id order, or nullopt after set m-1.
  std::optional<StreamedSet> Next();

 private:
  bool ReadLine(std::string& line);

  std::istream& in_;
  InstanceHeader header_;
  std::vector<std::string> comments_;
  std::size_t line_number_ = 0;
  SetId next_id_ = 0;
};

SetSystem ParseInstance(std::istream& in);
SetSystem ParseInstanceString(const std::string& text);
// Throws ParseError with line 0 when the file cannot be opened.
SetSystem ReadInstanceFile(const std::string& path);

// Writes the header, one line per set, preceded by "# "-prefixed comments.
void WriteInstance(std::ostream& out, const SetSystem& system,
                   const std::vector<std::string>& comments = {});
std::string FormatInstance(const SetSystem& system,
                           const std::vector<std::string>& comments = {});

}  // namespace muc

#endif  // MUC_INSTANCE_IO_H_
