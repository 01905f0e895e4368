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

#ifndef MUC_ERRORS_H_
#define MUC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace muc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set system or subcollection violates its structural invariants
// (element out of range, unsorted set, unknown or duplicate set id).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed an explicit resource budget (oracle
// enumeration, addressable universe size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed instance text. line() is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A streaming run could not produce a result (empty stream, every
// subsampled instance terminated).
class StreamError : public Error {
 public:
  using Error::Error;
};

// An internal identity of a generated construction failed to hold.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace muc

#endif  // MUC_ERRORS_H_
