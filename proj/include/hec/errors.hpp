// Copyright 2026 The hec Authors
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

#ifndef HEC_ERRORS_HPP
#define HEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hec {

// Error classes map one-to-one onto the C API status codes and CLI exit codes.
enum class ErrorKind {
  config = 2,
  io = 3,
  table = 4,
  equivalence = 5,
  internal = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string &what) : Error(ErrorKind::config, what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string &what) : Error(ErrorKind::io, what) {}
};

class TableError : public Error {
public:
  explicit TableError(const std::string &what) : Error(ErrorKind::table, what) {}
};

class EquivalenceError : public Error {
public:
  explicit EquivalenceError(const std::string &what) : Error(ErrorKind::equivalence, what) {}
};

// Broken internal invariant: unreachable from validated input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string &what) : Error(ErrorKind::internal, what) {}
};

} // namespace hec

#endif
