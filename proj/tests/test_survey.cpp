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

#include "hri/error.hpp"
#include "hri/survey.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace hri
{
namespace
{

using G = AutomationLevelGroup;

std::vector<SurveyResponse> panel(const std::string & name)
{
  return load_survey(
    test::data_path("survey/" + name + "_ratings.csv"),
    test::data_path("survey/" + name + "_respondents.csv"));
}

SurveyResponse uniform_respondent(const std::string & id, Rating r)
{
  SurveyResponse s;
  s.respondent_id = id;
  for (const auto & a : builtin_attribute_registry()) {
    for (const auto g : kAllGroups) {
      s.rate(a.id, g, r);
    }
  }
  s.day_ratings = {r, r, r};
  return s;
}

TEST(Aggregate, TwoPointMean)
{
  auto a = uniform_respondent("a", 2);
  auto b = uniform_respondent("b", 1);
  const std::vector<SurveyResponse> rs{a, b};
  const auto t = aggregate_mean_impact(rs);
  EXPECT_DOUBLE_EQ(t.at(G::AuD, AttributeId::HdMaps), 1.5);
  EXPECT_EQ(t.provenance(), WeightProvenance::Custom);
}

TEST(Aggregate, ConstantInput)
{
  const std::vector<SurveyResponse> rs{uniform_respondent("only", 2)};
  const auto t = aggregate_mean_impact(rs);
  for (const auto g : kAllGroups) {
    for (const auto w : t.group_weights(g)) {
      EXPECT_EQ(w, 2.0);
    }
  }
}

TEST(Aggregate, MissingRatingsExcludedFromDenominator)
{
  auto a = uniform_respondent("a", 2);
  auto b = uniform_respondent("b", 0);
  b.attribute_ratings[index_of(G::AsD)][index_of(AttributeId::Lighting)].reset();
  const std::vector<SurveyResponse> rs{a, b};
  const auto t = aggregate_mean_impact(rs);
  EXPECT_EQ(t.at(G::AsD, AttributeId::Lighting), 2.0);
  EXPECT_EQ(t.at(G::AuD, AttributeId::Lighting), 1.0);
}

TEST(Aggregate, EmptyPanelRejected)
{
  const std::vector<SurveyResponse> none;
  try {
    aggregate_mean_impact(none);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

TEST(Aggregate, UnratedPairNamed)
{
  auto a = uniform_respondent("a", 1);
  a.attribute_ratings[index_of(G::AuD)][index_of(AttributeId::LayBy)].reset();
  const std::vector<SurveyResponse> rs{a};
  try {
    aggregate_mean_impact(rs);
    FAIL();
  } catch (const Error & e) {
    EXPECT_NE(std::string(e.what()).find("lay-by"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("AuD"), std::string::npos);
  }
}

TEST(ImpactDifference, BuiltinGreenBars)
{
  const auto d = impact_difference(builtin_weight_table());
  EXPECT_NEAR(d[index_of(AttributeId::HdMaps)], 0.7, 1e-12);
  EXPECT_NEAR(d[index_of(AttributeId::HorizontalCurvature)], -0.15, 1e-12);
  int negatives = 0;
  for (const auto v : d) {
    negatives += v < 0.0;
  }
  EXPECT_EQ(negatives, 1);
}

TEST(ImpactDifference, SymmetricTableIsZero)
{
  WeightTable t;
  auto g = test::rng(1);
  for (const auto & a : builtin_attribute_registry()) {
    const double w = std::uniform_real_distribution<double>(0, 2)(g);
    t.set(G::AsD, a.id, w);
    t.set(G::AuD, a.id, w);
  }
  for (const auto v : impact_difference(t)) {
    EXPECT_EQ(v, 0.0);
  }
}

TEST(GroupedMean, SingletonMean)
{
  auto a = uniform_respondent("a", 1);
  a.region = Region::Europe;
  const std::vector<SurveyResponse> rs{a};
  const auto m = grouped_mean(rs);
  ASSERT_EQ(m.size(), 3U);
  for (const auto & [key, v] : m) {
    EXPECT_EQ(v, 1.0);
  }
}

TEST(GroupedMean, AbsentGroupsOmitted)
{
  auto a = uniform_respondent("a", 2);
  a.region = Region::Usa;
  a.day_ratings[index_of(DayService::Day2)].reset();
  const std::vector<SurveyResponse> rs{a};
  const auto m = grouped_mean(rs);
  EXPECT_EQ(m.size(), 2U);
  EXPECT_FALSE(m.contains({Region::Usa, DayService::Day2}));
  EXPECT_FALSE(m.contains({Region::Europe, DayService::Day1}));
}

TEST(Panel17, RegionalDayMeans)
{
  const auto m = grouped_mean(panel("panel17"));
  EXPECT_EQ(m.at({Region::Europe, DayService::Day3}), 1.7);
  EXPECT_LT(std::fabs(m.at({Region::Usa, DayService::Day3}) - 0.33), 0.005);
  EXPECT_LT(std::fabs(m.at({Region::Usa, DayService::Day1}) - 1.33), 0.005);
  EXPECT_EQ(m.at({Region::Usa, DayService::Day2}), 1.0);
}

TEST(Panel17, ReproducesAllButFiveTwentiethColumns)
{
  // Means of at most 17 ratings have denominators up to 17; five built-in
  // values need denominator 20 and cannot be matched by any such panel.
  const auto responses = panel("panel17");
  ASSERT_EQ(responses.size(), 17U);
  const auto t = aggregate_mean_impact(responses);
  const std::set<std::pair<G, AttributeId>> unreachable{
    {G::AuD, AttributeId::VegetationMaintenance}, {G::AuD, AttributeId::LaneMarkConsistency},
    {G::AuD, AttributeId::SignMaintenance},       {G::AuD, AttributeId::Lighting},
    {G::AsD, AttributeId::HorizontalCurvature}};
  for (const auto g : kAllGroups) {
    for (const auto & a : builtin_attribute_registry()) {
      const double got = t.at(g, a.id);
      const double want = builtin_weight_table().at(g, a.id);
      if (unreachable.contains({g, a.id})) {
        EXPECT_NE(got, want) << a.key;
        EXPECT_LT(std::fabs(got - want), 0.06) << a.key;
      } else {
        EXPECT_EQ(got, want) << to_string(g) << " " << a.key;
      }
    }
  }
}

TEST(Panel20, ReproducesBuiltinTableExactly)
{
  auto t = aggregate_mean_impact(panel("panel20"));
  t.set_provenance(WeightProvenance::BuiltinSurvey);
  EXPECT_EQ(t, builtin_weight_table());
}

TEST(Properties, PermutationInvariance)
{
  auto responses = panel("panel20");
  const auto base = aggregate_mean_impact(responses);
  const auto base_days = grouped_mean(responses);
  auto g = test::rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(responses.begin(), responses.end(), g);
    EXPECT_EQ(aggregate_mean_impact(responses), base);
    EXPECT_EQ(grouped_mean(responses), base_days);
  }
}

std::vector<SurveyResponse> random_panel(std::mt19937_64 & g, bool complete)
{
  const auto n = std::uniform_int_distribution<int>(1, 25)(g);
  std::vector<SurveyResponse> rs;
  for (int k = 0; k < n; ++k) {
    SurveyResponse r;
    r.respondent_id = "r" + std::to_string(k);
    r.region = static_cast<Region>(std::uniform_int_distribution<int>(0, 2)(g));
    for (const auto & a : builtin_attribute_registry()) {
      for (const auto grp : kAllGroups) {
        if (complete || k == 0 || std::bernoulli_distribution(0.8)(g)) {
          r.rate(a.id, grp, static_cast<Rating>(std::uniform_int_distribution<int>(0, 2)(g)));
        }
      }
    }
    rs.push_back(std::move(r));
  }
  return rs;
}

TEST(Properties, MeansStayOnRatingScale)
{
  auto g = test::rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = aggregate_mean_impact(random_panel(g, false));
    for (const auto grp : kAllGroups) {
      for (const auto w : t.group_weights(grp)) {
        ASSERT_GE(w, 0.0);
        ASSERT_LE(w, 2.0);
      }
    }
  }
}

TEST(Properties, DifferenceOfMeansIsMeanOfDifferences)
{
  auto g = test::rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rs = random_panel(g, true);
    const auto d = impact_difference(aggregate_mean_impact(rs));
    for (const auto & a : builtin_attribute_registry()) {
      double sum = 0.0;
      for (const auto & r : rs) {
        sum += static_cast<double>(*r.rating(a.id, G::AuD)) - *r.rating(a.id, G::AsD);
      }
      ASSERT_NEAR(d[index_of(a.id)], sum / static_cast<double>(rs.size()), 1e-12);
    }
  }
}

TEST(SurveyCsv, RatingOutOfRangeNamesRow)
{
  const std::string people =
    "respondent_id,role,region,av_expertise,cits_expertise,day1,day2,day3\nA,Professor,Europe,3,3,1,1,1\n";
  const std::string ratings = "respondent_id,attribute,group,rating\nA,hd-maps,AuD,2\nA,lay-by,AsD,3\n";
  try {
    parse_survey(ratings, "r.csv", people, "p.csv");
    FAIL();
  } catch (const ParseError & e) {
    EXPECT_EQ(e.source(), "r.csv");
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(SurveyCsv, RejectsUnknownRespondentAndBadExpertise)
{
  const std::string header = "respondent_id,role,region,av_expertise,cits_expertise,day1,day2,day3\n";
  EXPECT_THROW(
    parse_survey(
      "respondent_id,attribute,group,rating\nB,hd-maps,AuD,2\n", "r", header + "A,x,Europe,3,3,,,\n", "p"),
    ParseError);
  EXPECT_THROW(
    parse_survey("respondent_id,attribute,group,rating\n", "r", header + "A,x,Europe,6,3,,,\n", "p"),
    ParseError);
  EXPECT_THROW(
    parse_survey("respondent_id,attribute,group,rating\n", "r", header + "A,x,Mars,3,3,,,\n", "p"),
    ParseError);
}

TEST(SurveyCsv, RoleExpertiseSummary)
{
  const auto roles = expertise_by_role(panel("panel17"));
  std::size_t total = 0;
  for (const auto & [role, e] : roles) {
    total += e.respondents;
    EXPECT_GE(e.av_mean, 1.0);
    EXPECT_LE(e.cits_mean, 5.0);
  }
  EXPECT_EQ(total, 17U);
}

}  // namespace
}  // namespace hri
