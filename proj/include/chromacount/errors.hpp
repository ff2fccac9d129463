// Copyright 2026 The chromacount Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromacount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (family spec, graph6, witness text). `offset` is
/// the byte position where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Structurally invalid arguments: wrong arity, too many vertices, colors out
/// of range, non-uniform list sizes where a fold size is required.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy an operation's structural precondition
/// (disconnected, non-bipartite, wrong family, lemma hypotheses).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chromacount
