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

#ifndef HRI__JSON_UTIL_HPP_
#define HRI__JSON_UTIL_HPP_

#include "hri/error.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hri::json_util
{

using nlohmann::json;

/// Parses JSON, converting syntax errors into ParseError with line/column.
inline json parse(std::string_view text, std::string_view source, std::size_t first_line = 1)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error & e) {
    std::size_t line = first_line;
    std::size_t col = 1;
    const auto stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) {
      msg = msg.substr(p);
    }
    throw ParseError(std::string(source), line, col, msg);
  }
}

/// Fetches a required member of the expected JSON type; `where` names the
/// enclosing object in error messages.
inline const json & require(
  const json & obj, const char * key, json::value_t type, std::string_view source,
  std::string_view where)
{
  const auto fail = [&](const std::string & what) {
    return Error(
      ErrorKind::Input, std::string(source) + ": " + std::string(where) + ": " + what);
  };
  if (!obj.is_object()) {
    throw fail("expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw fail(std::string("missing key '") + key + "'");
  }
  const bool numeric_ok = type == json::value_t::number_float && it->is_number();
  const bool integer_ok = type == json::value_t::number_unsigned && it->is_number_unsigned();
  if (!(it->type() == type || numeric_ok || integer_ok)) {
    throw fail(std::string("key '") + key + "' has the wrong type");
  }
  return *it;
}

}  // namespace hri::json_util

#endif  // HRI__JSON_UTIL_HPP_
