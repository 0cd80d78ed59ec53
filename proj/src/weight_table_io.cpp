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
#include "hri/fileio.hpp"
#include "hri/taxonomy.hpp"

#include <bitset>

namespace hri
{

WeightTable parse_weight_table_csv(std::string_view text, std::string_view source)
{
  const auto table = csv::parse(text, source, {"attribute", "asd_weight", "aud_weight"});
  WeightTable out(WeightProvenance::Custom);
  std::bitset<kAttributeCount> seen;
  for (const auto & row : table.rows) {
    const auto attr = parse_attribute(row.fields[0]);
    if (!attr) {
      throw ParseError(table.source, row.line, 1, "unknown attribute '" + row.fields[0] + "'");
    }
    if (seen.test(index_of(*attr))) {
      throw ParseError(table.source, row.line, 1, "duplicate attribute '" + row.fields[0] + "'");
    }
    seen.set(index_of(*attr));
    out.set(AutomationLevelGroup::AsD, *attr, csv::to_double(table, row, 1));
    out.set(AutomationLevelGroup::AuD, *attr, csv::to_double(table, row, 2));
  }
  return out;
}

WeightTable load_weight_table(const std::filesystem::path & path)
{
  return parse_weight_table_csv(read_text_file(path), path.string());
}

std::string format_weight_table_csv(const WeightTable & table)
{
  std::string out = "attribute,asd_weight,aud_weight\n";
  for (const auto & attr : builtin_attribute_registry()) {
    const auto asd = table.find(AutomationLevelGroup::AsD, attr.id);
    const auto aud = table.find(AutomationLevelGroup::AuD, attr.id);
    if (!asd && !aud) {
      continue;
    }
    out += std::string(attr.key) + "," + (asd ? csv::format_double(*asd) : "") + "," +
           (aud ? csv::format_double(*aud) : "") + "\n";
  }
  return out;
}

MacroWeightTable parse_macro_weight_csv(std::string_view text, std::string_view source)
{
  const auto table = csv::parse(text, source, {"category", "asd_weight", "aud_weight"});
  MacroWeightTable out;
  std::bitset<kMacroCategoryCount> seen;
  for (const auto & row : table.rows) {
    const auto cat = parse_macro_category(row.fields[0]);
    if (!cat) {
      throw ParseError(table.source, row.line, 1, "unknown macro-category '" + row.fields[0] + "'");
    }
    if (seen.test(index_of(*cat))) {
      throw ParseError(table.source, row.line, 1, "duplicate macro-category '" + row.fields[0] + "'");
    }
    seen.set(index_of(*cat));
    for (auto g : kAllGroups) {
      const double w = csv::to_double(table, row, 1 + index_of(g));
      if (w < 0.0) {
        throw ParseError(
          table.source, row.line, 2 + index_of(g), "negative weight", ErrorKind::Validation);
      }
      out.set(g, *cat, w);
    }
  }
  if (!seen.all()) {
    throw Error(ErrorKind::Validation, table.source + ": all four macro-categories are required");
  }
  return out;
}

}  // namespace hri
