// Copyright 2026 The HRI Toolkit Authors
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

#ifndef HRI__ERROR_HPP_
#define HRI__ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hri
{

/// Broad failure class. The CLI maps these onto its exit codes.
enum class ErrorKind {
  Input,       ///< malformed or unreadable content (exit 1)
  Validation,  ///< well-formed content that violates a domain invariant (exit 2)
  Io,          ///< filesystem or socket failure (exit 3)
};

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string & message)
  : std::runtime_error(message), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Failure positioned in a named text source. Line and column are 1-based;
/// column 0 means the whole line.
class ParseError : public Error
{
public:
  ParseError(
    std::string source, std::size_t line, std::size_t column, const std::string & message,
    ErrorKind kind = ErrorKind::Input)
  : Error(kind, format(source, line, column, message)),
    source_(std::move(source)),
    line_(line),
    column_(column)
  {
  }

  const std::string & source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(
    const std::string & source, std::size_t line, std::size_t column, const std::string & message)
  {
    std::string out = source + ":" + std::to_string(line);
    if (column > 0) {
      out += ":" + std::to_string(column);
    }
    return out + ": " + message;
  }

  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// Binary decoding failure at a byte offset.
class DecodeError : public Error
{
public:
  DecodeError(std::size_t offset, const std::string & message, ErrorKind kind = ErrorKind::Input)
  : Error(kind, "offset " + std::to_string(offset) + ": " + message), offset_(offset)
  {
  }

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace hri

#endif  // HRI__ERROR_HPP_
