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

#include "hri/survey.hpp"

#include "hri/error.hpp"

#include <algorithm>
#include <cctype>

namespace hri
{

std::string_view to_string(Region r)
{
  switch (r) {
    case Region::Europe:
      return "Europe";
    case Region::Usa:
      return "USA";
    case Region::Other:
      return "Other";
  }
  return "?";
}

std::optional<Region> parse_region(std::string_view text)
{
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (lower == "europe") {
    return Region::Europe;
  }
  if (lower == "usa") {
    return Region::Usa;
  }
  if (lower == "other") {
    return Region::Other;
  }
  return std::nullopt;
}

std::string_view to_string(DayService d)
{
  switch (d) {
    case DayService::Day1:
      return "Day1";
    case DayService::Day2:
      return "Day2";
    case DayService::Day3:
      return "Day3";
  }
  return "?";
}

WeightTable aggregate_mean_impact(std::span<const SurveyResponse> responses)
{
  if (responses.empty()) {
    throw Error(ErrorKind::Validation, "survey has no responses");
  }
  WeightTable table(WeightProvenance::Custom);
  for (auto group : kAllGroups) {
    for (const auto & attr : builtin_attribute_registry()) {
      // Integer sums are exact, so the mean does not depend on response order.
      long sum = 0;
      long count = 0;
      for (const auto & r : responses) {
        if (const auto rating = r.rating(attr.id, group)) {
          sum += *rating;
          ++count;
        }
      }
      if (count == 0) {
        throw Error(
          ErrorKind::Validation, "survey has no ratings for (" + std::string(attr.key) + ", " +
                                   std::string(to_string(group)) + ")");
      }
      table.set(group, attr.id, static_cast<double>(sum) / static_cast<double>(count));
    }
  }
  return table;
}

PerAttribute<double> impact_difference(const WeightTable & table)
{
  PerAttribute<double> diff{};
  for (std::size_t i = 0; i < kAttributeCount; ++i) {
    const auto a = attribute_at(i);
    diff[i] = table.at(AutomationLevelGroup::AuD, a) - table.at(AutomationLevelGroup::AsD, a);
  }
  return diff;
}

std::map<RegionDayKey, double> grouped_mean(std::span<const SurveyResponse> responses)
{
  GroupedMean<RegionDayKey> acc;
  for (const auto & r : responses) {
    for (auto day : kAllDays) {
      if (const auto rating = r.day_ratings[index_of(day)]) {
        acc.add({r.region, day}, *rating);
      }
    }
  }
  return acc.means();
}

std::map<std::string, RoleExpertise> expertise_by_role(std::span<const SurveyResponse> responses)
{
  GroupedMean<std::string> av;
  GroupedMean<std::string> cits;
  std::map<std::string, std::size_t> counts;
  for (const auto & r : responses) {
    av.add(r.role, r.av_expertise);
    cits.add(r.role, r.cits_expertise);
    ++counts[r.role];
  }
  const auto av_means = av.means();
  const auto cits_means = cits.means();
  std::map<std::string, RoleExpertise> out;
  for (const auto & [role, n] : counts) {
    out.emplace(role, RoleExpertise{av_means.at(role), cits_means.at(role), n});
  }
  return out;
}

}  // namespace hri
