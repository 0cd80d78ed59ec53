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

#include "hri/taxonomy.hpp"

#include "hri/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace hri
{
namespace
{

#include "builtin_weights.inc"

using enum MacroCategory;

constexpr std::array<Attribute, kAttributeCount> kRegistry{{
  {AttributeId::LaneMarkRetroreflectivity, "lane-mark-retroreflectivity",
   "Lane marking retroreflectivity", RoadMarkingsSignage},
  {AttributeId::LaneMarkContrast, "lane-mark-contrast", "Lane marking contrast", RoadMarkingsSignage},
  {AttributeId::SignRetroreflectivity, "sign-retroreflectivity", "Sign retroreflectivity",
   RoadMarkingsSignage},
  {AttributeId::VariableMessageSigns, "variable-message-signs", "Variable message signs",
   RoadMarkingsSignage},
  {AttributeId::LaneMarkWidth, "lane-mark-width", "Lane marking width", RoadMarkingsSignage},
  {AttributeId::RoadworkSignCompliance, "roadwork-sign-compliance", "Roadwork sign compliance",
   RoadMaintenanceManagement},
  {AttributeId::PavementMaintenance, "pavement-maintenance", "Pavement maintenance",
   RoadMaintenanceManagement},
  {AttributeId::VegetationMaintenance, "vegetation-maintenance", "Vegetation maintenance",
   RoadMaintenanceManagement},
  {AttributeId::LaneMarkConsistency, "lane-mark-consistency", "Lane marking consistency",
   RoadMaintenanceManagement},
  {AttributeId::LaneMarkMaintenance, "lane-mark-maintenance", "Lane marking maintenance",
   RoadMaintenanceManagement},
  {AttributeId::SignMaintenance, "sign-maintenance", "Sign maintenance", RoadMaintenanceManagement},
  {AttributeId::DedicatedAvLane, "dedicated-av-lane", "Dedicated AV lane", RoadwayDesignSafety},
  {AttributeId::EmergencyLane, "emergency-lane", "Emergency lane", RoadwayDesignSafety},
  {AttributeId::LaneWidth, "lane-width", "Lane width", RoadwayDesignSafety},
  {AttributeId::RoadStuds, "road-studs", "Road studs", RoadwayDesignSafety},
  {AttributeId::LayBy, "lay-by", "Lay-by", RoadwayDesignSafety},
  {AttributeId::VerticalCurvature, "vertical-curvature", "Vertical curvature", RoadwayDesignSafety},
  {AttributeId::DrainingPavement, "draining-pavement", "Draining pavement", RoadwayDesignSafety},
  {AttributeId::GuardRail, "guard-rail", "Guard rail", RoadwayDesignSafety},
  {AttributeId::Lighting, "lighting", "Lighting", RoadwayDesignSafety},
  {AttributeId::RumbleStripes, "rumble-stripes", "Rumble stripes", RoadwayDesignSafety},
  {AttributeId::HorizontalCurvature, "horizontal-curvature", "Horizontal curvature",
   RoadwayDesignSafety},
  {AttributeId::HdMaps, "hd-maps", "Preloaded HD maps", PreloadedHdMaps},
}};

static_assert([] {
  for (std::size_t i = 0; i < kRegistry.size(); ++i) {
    if (index_of(kRegistry[i].id) != i) {
      return false;
    }
  }
  return true;
}());

bool iequals(std::string_view a, std::string_view b)
{
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

}  // namespace

std::string_view to_string(AutomationLevelGroup g)
{
  return g == AutomationLevelGroup::AsD ? "AsD" : "AuD";
}

std::optional<AutomationLevelGroup> parse_group(std::string_view text)
{
  if (iequals(text, "AsD")) {
    return AutomationLevelGroup::AsD;
  }
  if (iequals(text, "AuD")) {
    return AutomationLevelGroup::AuD;
  }
  return std::nullopt;
}

std::string_view to_string(MacroCategory c)
{
  switch (c) {
    case RoadMarkingsSignage:
      return "road-markings-signage";
    case RoadMaintenanceManagement:
      return "road-maintenance-management";
    case RoadwayDesignSafety:
      return "roadway-design-safety";
    case PreloadedHdMaps:
      return "preloaded-hd-maps";
  }
  return "?";
}

std::string_view display_name(MacroCategory c)
{
  switch (c) {
    case RoadMarkingsSignage:
      return "Road Markings & Signage";
    case RoadMaintenanceManagement:
      return "Road Maintenance & Management";
    case RoadwayDesignSafety:
      return "Roadway Design & Safety Features";
    case PreloadedHdMaps:
      return "Preloaded HD Maps";
  }
  return "?";
}

std::optional<MacroCategory> parse_macro_category(std::string_view text)
{
  for (auto c : kAllMacroCategories) {
    if (text == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::string_view to_string(AttributeId a) { return kRegistry[index_of(a)].key; }

std::optional<AttributeId> parse_attribute(std::string_view text)
{
  for (const auto & attr : kRegistry) {
    if (attr.key == text) {
      return attr.id;
    }
  }
  return std::nullopt;
}

std::span<const Attribute> builtin_attribute_registry() { return kRegistry; }

const Attribute & attribute_info(AttributeId a) { return kRegistry.at(index_of(a)); }

std::string_view to_string(WeightProvenance p)
{
  switch (p) {
    case WeightProvenance::BuiltinSurvey:
      return "builtin-survey";
    case WeightProvenance::MacroSurvey:
      return "macro-survey";
    case WeightProvenance::Custom:
      return "custom";
  }
  return "?";
}

void WeightTable::set(AutomationLevelGroup group, AttributeId attribute, double weight)
{
  entries_[index_of(group)][index_of(attribute)] = weight;
}

void WeightTable::erase(AutomationLevelGroup group, AttributeId attribute)
{
  entries_[index_of(group)][index_of(attribute)].reset();
}

std::optional<double> WeightTable::find(AutomationLevelGroup group, AttributeId attribute) const
{
  return entries_[index_of(group)][index_of(attribute)];
}

double WeightTable::at(AutomationLevelGroup group, AttributeId attribute) const
{
  const auto w = find(group, attribute);
  if (!w) {
    throw Error(
      ErrorKind::Validation, "weight table has no entry for (" + std::string(to_string(group)) +
                               ", " + std::string(to_string(attribute)) + ")");
  }
  return *w;
}

std::size_t WeightTable::size() const
{
  std::size_t n = 0;
  for (const auto & group : entries_) {
    n += static_cast<std::size_t>(std::count_if(
      group.begin(), group.end(), [](const auto & w) { return w.has_value(); }));
  }
  return n;
}

PerAttribute<double> WeightTable::group_weights(AutomationLevelGroup group) const
{
  PerAttribute<double> out{};
  for (std::size_t i = 0; i < kAttributeCount; ++i) {
    out[i] = at(group, attribute_at(i));
  }
  return out;
}

const WeightTable & builtin_weight_table()
{
  static const WeightTable table = [] {
    auto t = parse_weight_table_csv(kBuiltinWeightsCsv, "builtin_survey.csv");
    t.set_provenance(WeightProvenance::BuiltinSurvey);
    return t;
  }();
  return table;
}

const MacroWeightTable & macro_weight_table()
{
  static const MacroWeightTable table = parse_macro_weight_csv(kMacroWeightsCsv, "macro_survey.csv");
  return table;
}

std::string ValidationReport::to_string() const
{
  std::string out;
  for (const auto & v : violations) {
    out += v.message;
    out += '\n';
  }
  return out;
}

ValidationReport validate_weight_table(const WeightTable & table)
{
  ValidationReport report;
  using Kind = WeightViolation::Kind;
  for (auto group : kAllGroups) {
    const std::string gname(hri::to_string(group));
    bool any_positive = false;
    for (const auto & attr : kRegistry) {
      const auto w = table.find(group, attr.id);
      const std::string pair = "(" + gname + ", " + std::string(attr.key) + ")";
      if (!w) {
        report.violations.push_back({Kind::Missing, group, attr.id, "missing weight for " + pair});
        continue;
      }
      if (!std::isfinite(*w)) {
        report.violations.push_back(
          {Kind::NonFinite, group, attr.id, "non-finite weight for " + pair});
        continue;
      }
      if (*w < 0.0) {
        report.violations.push_back(
          {Kind::Negative, group, attr.id,
           "negative weight " + std::to_string(*w) + " for " + pair});
        continue;
      }
      any_positive = any_positive || *w > 0.0;
    }
    if (!any_positive) {
      report.violations.push_back(
        {Kind::AllZero, group, std::nullopt, "no positive weight for group " + gname});
    }
  }
  return report;
}

}  // namespace hri
