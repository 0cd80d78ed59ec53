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

#include "csv.hpp"

#include "hri/error.hpp"

#include <charconv>
#include <cmath>

namespace hri::csv
{
namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one physical line. Quoted fields may not span lines; none of the
// formats here need that.
std::vector<std::string> split_line(std::string_view line, const std::string & source, std::size_t lineno)
{
  std::vector<std::string> fields;
  std::string current;
  std::size_t i = 0;
  bool field_start = true;
  while (true) {
    if (field_start && i < line.size() && line[i] == '"') {
      ++i;
      while (true) {
        if (i >= line.size()) {
          throw ParseError(source, lineno, i + 1, "unterminated quoted field");
        }
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            current.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        current.push_back(line[i++]);
      }
      if (i < line.size() && line[i] != ',') {
        throw ParseError(source, lineno, i + 1, "unexpected character after closing quote");
      }
    }
    while (i < line.size() && line[i] != ',') {
      current.push_back(line[i++]);
    }
    fields.emplace_back(trim(current));
    current.clear();
    if (i >= line.size()) {
      break;
    }
    ++i;  // comma
    field_start = true;
  }
  return fields;
}

}  // namespace

Table parse(
  std::string_view text, std::string_view source, std::initializer_list<std::string_view> header)
{
  Table table;
  table.source = std::string(source);
  if (text.starts_with("\xEF\xBB\xBF")) {
    text.remove_prefix(3);
  }
  bool have_header = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    const auto trimmed = trim(line);
    if (trimmed.empty()) {
      continue;
    }
    if (trimmed.front() == '#') {
      table.comments.push_back({lineno, std::string(trimmed.substr(1))});
      continue;
    }
    auto fields = split_line(line, table.source, lineno);
    if (!have_header) {
      bool match = fields.size() == header.size();
      std::size_t k = 0;
      for (auto expected : header) {
        match = match && fields[k++] == expected;
      }
      if (!match) {
        std::string want;
        for (auto expected : header) {
          want += (want.empty() ? "" : ",") + std::string(expected);
        }
        throw ParseError(table.source, lineno, 0, "expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError(
        table.source, lineno, 0,
        "expected " + std::to_string(header.size()) + " fields, found " +
          std::to_string(fields.size()));
    }
    table.rows.push_back({lineno, std::move(fields)});
  }
  if (!have_header) {
    throw ParseError(table.source, lineno == 0 ? 1 : lineno, 0, "missing header line");
  }
  return table;
}

std::string quote(std::string_view field)
{
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::int64_t to_int(const Table & table, const Row & row, std::size_t column)
{
  const auto & s = row.fields.at(column);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(table.source, row.line, column + 1, "expected an integer, found '" + s + "'");
  }
  return value;
}

double to_double(const Table & table, const Row & row, std::size_t column)
{
  const auto & s = row.fields.at(column);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(table.source, row.line, column + 1, "expected a number, found '" + s + "'");
  }
  return value;
}

std::string format_double(double value)
{
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace hri::csv
