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

#ifndef HRI__TAXONOMY_HPP_
#define HRI__TAXONOMY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hri
{

/// SAE level groups: assisted driving (SAE 1-2) and automated driving (SAE 3-4).
enum class AutomationLevelGroup : std::uint8_t { AsD = 0, AuD = 1 };

inline constexpr std::size_t kGroupCount = 2;
inline constexpr std::array<AutomationLevelGroup, kGroupCount> kAllGroups{
  AutomationLevelGroup::AsD, AutomationLevelGroup::AuD};

constexpr std::size_t index_of(AutomationLevelGroup g) { return static_cast<std::size_t>(g); }
std::string_view to_string(AutomationLevelGroup g);
/// Accepts "AsD"/"AuD" in any letter case.
std::optional<AutomationLevelGroup> parse_group(std::string_view text);

enum class MacroCategory : std::uint8_t {
  RoadMarkingsSignage = 0,
  RoadMaintenanceManagement = 1,
  RoadwayDesignSafety = 2,
  PreloadedHdMaps = 3,
};

inline constexpr std::size_t kMacroCategoryCount = 4;
inline constexpr std::array<MacroCategory, kMacroCategoryCount> kAllMacroCategories{
  MacroCategory::RoadMarkingsSignage, MacroCategory::RoadMaintenanceManagement,
  MacroCategory::RoadwayDesignSafety, MacroCategory::PreloadedHdMaps};

constexpr std::size_t index_of(MacroCategory c) { return static_cast<std::size_t>(c); }
/// Kebab-case key, e.g. "road-markings-signage".
std::string_view to_string(MacroCategory c);
std::string_view display_name(MacroCategory c);
std::optional<MacroCategory> parse_macro_category(std::string_view text);

/// Closed set of static infrastructure attributes. Enumerator order is the
/// registry order and doubles as the dense index.
enum class AttributeId : std::uint8_t {
  LaneMarkRetroreflectivity,
  LaneMarkContrast,
  SignRetroreflectivity,
  VariableMessageSigns,
  LaneMarkWidth,
  RoadworkSignCompliance,
  PavementMaintenance,
  VegetationMaintenance,
  LaneMarkConsistency,
  LaneMarkMaintenance,
  SignMaintenance,
  DedicatedAvLane,
  EmergencyLane,
  LaneWidth,
  RoadStuds,
  LayBy,
  VerticalCurvature,
  DrainingPavement,
  GuardRail,
  Lighting,
  RumbleStripes,
  HorizontalCurvature,
  HdMaps,
};

inline constexpr std::size_t kAttributeCount = 23;

constexpr std::size_t index_of(AttributeId a) { return static_cast<std::size_t>(a); }
constexpr AttributeId attribute_at(std::size_t index) { return static_cast<AttributeId>(index); }

/// Stable kebab-case identifier used in every file format.
std::string_view to_string(AttributeId a);
std::optional<AttributeId> parse_attribute(std::string_view text);

struct Attribute
{
  AttributeId id;
  std::string_view key;
  std::string_view display_name;
  MacroCategory category;
};

/// All attributes in registry order, each with its macro-category.
std::span<const Attribute> builtin_attribute_registry();
const Attribute & attribute_info(AttributeId a);

/// Dense per-attribute storage indexed by AttributeId.
template <class T>
using PerAttribute = std::array<T, kAttributeCount>;

enum class WeightProvenance : std::uint8_t { BuiltinSurvey, MacroSurvey, Custom };
std::string_view to_string(WeightProvenance p);

/// Impact weights per (group, attribute) on the survey's 0-2 scale. Entries
/// may be missing so that incomplete custom tables can be represented and
/// reported by validate_weight_table().
class WeightTable
{
public:
  explicit WeightTable(WeightProvenance provenance = WeightProvenance::Custom)
  : provenance_(provenance)
  {
  }

  void set(AutomationLevelGroup group, AttributeId attribute, double weight);
  void erase(AutomationLevelGroup group, AttributeId attribute);
  std::optional<double> find(AutomationLevelGroup group, AttributeId attribute) const;
  /// Throws Error(Validation) when the entry is missing.
  double at(AutomationLevelGroup group, AttributeId attribute) const;

  /// Number of present entries.
  std::size_t size() const;

  /// Dense weights for one group; throws Error(Validation) unless the group is total.
  PerAttribute<double> group_weights(AutomationLevelGroup group) const;

  WeightProvenance provenance() const { return provenance_; }
  void set_provenance(WeightProvenance p) { provenance_ = p; }

  bool operator==(const WeightTable & other) const = default;

private:
  WeightProvenance provenance_;
  std::array<PerAttribute<std::optional<double>>, kGroupCount> entries_{};
};

/// Per-attribute weights read from the expert survey; provenance BuiltinSurvey.
const WeightTable & builtin_weight_table();

/// Macro-category weights, (group, category) -> weight.
class MacroWeightTable
{
public:
  MacroWeightTable() = default;
  explicit MacroWeightTable(
    std::array<std::array<double, kMacroCategoryCount>, kGroupCount> weights)
  : weights_(weights)
  {
  }

  double at(AutomationLevelGroup g, MacroCategory c) const
  {
    return weights_[index_of(g)][index_of(c)];
  }
  void set(AutomationLevelGroup g, MacroCategory c, double w) { weights_[index_of(g)][index_of(c)] = w; }
  std::span<const double, kMacroCategoryCount> group_weights(AutomationLevelGroup g) const
  {
    return weights_[index_of(g)];
  }

  bool operator==(const MacroWeightTable & other) const = default;

private:
  std::array<std::array<double, kMacroCategoryCount>, kGroupCount> weights_{};
};

/// Average macro-category weights from the expert survey.
const MacroWeightTable & macro_weight_table();

struct WeightViolation
{
  enum class Kind { Missing, Negative, NonFinite, AllZero };
  Kind kind;
  AutomationLevelGroup group;
  std::optional<AttributeId> attribute;  // absent for AllZero
  std::string message;
};

struct ValidationReport
{
  std::vector<WeightViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_weight_table(const WeightTable & table);

// Weight-table CSV: header `attribute,asd_weight,aud_weight`, one row per
// attribute, '#' comment lines allowed. Unknown attributes and duplicates are
// rejected with the row's line number; missing rows are left for validation.
WeightTable parse_weight_table_csv(std::string_view text, std::string_view source);
WeightTable load_weight_table(const std::filesystem::path & path);
std::string format_weight_table_csv(const WeightTable & table);

// Macro-weight CSV: header `category,asd_weight,aud_weight`; all four rows required.
MacroWeightTable parse_macro_weight_csv(std::string_view text, std::string_view source);

}  // namespace hri

#endif  // HRI__TAXONOMY_HPP_
