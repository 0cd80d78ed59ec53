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

#ifndef HRI__SURVEY_HPP_
#define HRI__SURVEY_HPP_

#include "hri/taxonomy.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hri
{

enum class Region : std::uint8_t { Europe, Usa, Other };
std::string_view to_string(Region r);
/// "Europe", "USA", "Other" (any letter case).
std::optional<Region> parse_region(std::string_view text);

enum class DayService : std::uint8_t { Day1 = 0, Day2 = 1, Day3 = 2 };
inline constexpr std::size_t kDayCount = 3;
inline constexpr std::array<DayService, kDayCount> kAllDays{
  DayService::Day1, DayService::Day2, DayService::Day3};
constexpr std::size_t index_of(DayService d) { return static_cast<std::size_t>(d); }
std::string_view to_string(DayService d);

/// Survey rating in {0, 1, 2}.
using Rating = std::uint8_t;
inline constexpr Rating kMaxRating = 2;

struct SurveyResponse
{
  std::string respondent_id;
  std::string role;
  Region region = Region::Other;
  int av_expertise = 1;    // 1..5
  int cits_expertise = 1;  // 1..5
  std::array<PerAttribute<std::optional<Rating>>, kGroupCount> attribute_ratings{};
  std::array<std::optional<Rating>, kDayCount> day_ratings{};

  void rate(AttributeId a, AutomationLevelGroup g, Rating r)
  {
    attribute_ratings[index_of(g)][index_of(a)] = r;
  }
  std::optional<Rating> rating(AttributeId a, AutomationLevelGroup g) const
  {
    return attribute_ratings[index_of(g)][index_of(a)];
  }
};

/// Mean of the present ratings per (group, attribute). Missing ratings are
/// excluded from the denominator. Throws Error(Validation) for an empty panel
/// or a (attribute, group) pair nobody rated.
WeightTable aggregate_mean_impact(std::span<const SurveyResponse> responses);

/// weight(AuD, a) - weight(AsD, a) for every attribute.
PerAttribute<double> impact_difference(const WeightTable & table);

/// Running means keyed by an arbitrary ordered key. Keys never fed a value
/// are absent from the result.
template <class Key>
class GroupedMean
{
public:
  void add(const Key & key, double value)
  {
    auto & [sum, count] = acc_[key];
    sum += value;
    ++count;
  }

  std::map<Key, double> means() const
  {
    std::map<Key, double> out;
    for (const auto & [key, acc] : acc_) {
      out.emplace(key, acc.first / static_cast<double>(acc.second));
    }
    return out;
  }

private:
  std::map<Key, std::pair<double, std::size_t>> acc_;
};

using RegionDayKey = std::pair<Region, DayService>;

/// Mean C-ITS day-service rating per (region, day) over respondents that gave one.
std::map<RegionDayKey, double> grouped_mean(std::span<const SurveyResponse> responses);

struct RoleExpertise
{
  double av_mean;
  double cits_mean;
  std::size_t respondents;
};

/// Mean self-assessed expertise per role.
std::map<std::string, RoleExpertise> expertise_by_role(std::span<const SurveyResponse> responses);

// Survey files:
//   ratings:     respondent_id,attribute,group,rating
//   respondents: respondent_id,role,region,av_expertise,cits_expertise,day1,day2,day3
// Day cells may be empty (no answer). Every rating must reference a listed
// respondent; duplicate (respondent, attribute, group) rows are rejected.
std::vector<SurveyResponse> parse_survey(
  std::string_view ratings_text, std::string_view ratings_source,
  std::string_view respondents_text, std::string_view respondents_source);

std::vector<SurveyResponse> load_survey(
  const std::filesystem::path & ratings, const std::filesystem::path & respondents);

std::string format_impact_difference_csv(const PerAttribute<double> & diff);
std::string format_grouped_mean_csv(const std::map<RegionDayKey, double> & means);

}  // namespace hri

#endif  // HRI__SURVEY_HPP_
