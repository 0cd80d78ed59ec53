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
#include "hri/survey.hpp"

#include <unordered_map>

namespace hri
{
namespace
{

Rating to_rating(const csv::Table & table, const csv::Row & row, std::size_t column)
{
  const auto v = csv::to_int(table, row, column);
  if (v < 0 || v > kMaxRating) {
    throw ParseError(
      table.source, row.line, column + 1, "rating " + std::to_string(v) + " outside {0,1,2}");
  }
  return static_cast<Rating>(v);
}

int to_expertise(const csv::Table & table, const csv::Row & row, std::size_t column)
{
  const auto v = csv::to_int(table, row, column);
  if (v < 1 || v > 5) {
    throw ParseError(
      table.source, row.line, column + 1, "expertise " + std::to_string(v) + " outside [1,5]");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<SurveyResponse> parse_survey(
  std::string_view ratings_text, std::string_view ratings_source,
  std::string_view respondents_text, std::string_view respondents_source)
{
  const auto people = csv::parse(
    respondents_text, respondents_source,
    {"respondent_id", "role", "region", "av_expertise", "cits_expertise", "day1", "day2", "day3"});
  std::vector<SurveyResponse> out;
  std::unordered_map<std::string, std::size_t> by_id;
  for (const auto & row : people.rows) {
    SurveyResponse r;
    r.respondent_id = row.fields[0];
    if (r.respondent_id.empty()) {
      throw ParseError(people.source, row.line, 1, "empty respondent_id");
    }
    if (by_id.contains(r.respondent_id)) {
      throw ParseError(people.source, row.line, 1, "duplicate respondent '" + r.respondent_id + "'");
    }
    r.role = row.fields[1];
    const auto region = parse_region(row.fields[2]);
    if (!region) {
      throw ParseError(people.source, row.line, 3, "unknown region '" + row.fields[2] + "'");
    }
    r.region = *region;
    r.av_expertise = to_expertise(people, row, 3);
    r.cits_expertise = to_expertise(people, row, 4);
    for (std::size_t d = 0; d < kDayCount; ++d) {
      if (!row.fields[5 + d].empty()) {
        r.day_ratings[d] = to_rating(people, row, 5 + d);
      }
    }
    by_id.emplace(r.respondent_id, out.size());
    out.push_back(std::move(r));
  }

  const auto ratings =
    csv::parse(ratings_text, ratings_source, {"respondent_id", "attribute", "group", "rating"});
  for (const auto & row : ratings.rows) {
    const auto it = by_id.find(row.fields[0]);
    if (it == by_id.end()) {
      throw ParseError(ratings.source, row.line, 1, "unknown respondent '" + row.fields[0] + "'");
    }
    const auto attr = parse_attribute(row.fields[1]);
    if (!attr) {
      throw ParseError(ratings.source, row.line, 2, "unknown attribute '" + row.fields[1] + "'");
    }
    const auto group = parse_group(row.fields[2]);
    if (!group) {
      throw ParseError(ratings.source, row.line, 3, "unknown group '" + row.fields[2] + "'");
    }
    auto & resp = out[it->second];
    if (resp.rating(*attr, *group)) {
      throw ParseError(
        ratings.source, row.line, 0,
        "duplicate rating for (" + row.fields[0] + ", " + row.fields[1] + ", " + row.fields[2] +
          ")");
    }
    resp.rate(*attr, *group, to_rating(ratings, row, 3));
  }
  return out;
}

std::vector<SurveyResponse> load_survey(
  const std::filesystem::path & ratings, const std::filesystem::path & respondents)
{
  return parse_survey(
    read_text_file(ratings), ratings.string(), read_text_file(respondents), respondents.string());
}

std::string format_impact_difference_csv(const PerAttribute<double> & diff)
{
  std::string out = "attribute,impact_difference\n";
  for (const auto & attr : builtin_attribute_registry()) {
    out += std::string(attr.key) + "," + csv::format_double(diff[index_of(attr.id)]) + "\n";
  }
  return out;
}

std::string format_grouped_mean_csv(const std::map<RegionDayKey, double> & means)
{
  std::string out = "region,day,mean\n";
  for (const auto & [key, mean] : means) {
    out += std::string(to_string(key.first)) + "," + std::string(to_string(key.second)) + "," +
           csv::format_double(mean) + "\n";
  }
  return out;
}

}  // namespace hri
