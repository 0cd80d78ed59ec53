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

#ifndef HRI__CSV_HPP_
#define HRI__CSV_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hri::csv
{

struct Row
{
  std::size_t line;  // 1-based line in the source
  std::vector<std::string> fields;
};

struct CommentLine
{
  std::size_t line;
  std::string text;  // without the leading '#'
};

struct Table
{
  std::string source;
  std::vector<Row> rows;
  std::vector<CommentLine> comments;
};

/// Strict RFC 4180-style reader. Lines starting with '#' and blank lines are
/// skipped (comments are kept for metadata); the first remaining line must
/// match `header` exactly; every row must have the header's column count.
Table parse(
  std::string_view text, std::string_view source, std::initializer_list<std::string_view> header);

/// Quotes a field when it contains a comma, quote or line break.
std::string quote(std::string_view field);

// Strict scalar conversions; throw ParseError positioned at (row.line, column).
std::int64_t to_int(const Table & table, const Row & row, std::size_t column);
double to_double(const Table & table, const Row & row, std::size_t column);

/// Shortest decimal representation that round-trips.
std::string format_double(double value);

}  // namespace hri::csv

#endif  // HRI__CSV_HPP_
