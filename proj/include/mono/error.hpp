// Copyright 2026 The Mono Authors
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

#ifndef MONO_ERROR_HPP
#define MONO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mono {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An edge insertion that would break a graph invariant.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// An exact routine was asked to work beyond its configured size or budget.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mono

#endif  // MONO_ERROR_HPP
