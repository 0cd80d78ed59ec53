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

#ifndef HRI__SCORING_HPP_
#define HRI__SCORING_HPP_

#include "hri/corridor.hpp"
#include "hri/taxonomy.hpp"

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

/// Scale maximum of the adequacy values; a single constant for every attribute.
inline constexpr Adequacy kVMax = kMaxAdequacy;

struct ReadinessScore
{
  std::size_t segment_index = 0;
  AutomationLevelGroup group = AutomationLevelGroup::AsD;
  double value = 0.0;  // percentage in [0, 100]
};

enum class ReadinessClass : std::uint8_t { Unlikely = 0, MayBe = 1, HighlyLikely = 2 };

inline constexpr double kMayBeLowerBound = 33.0;
inline constexpr double kHighlyLikelyLowerBound = 66.0;

/// "unlikely", "may-be", "highly-likely".
std::string_view to_string(ReadinessClass c);
std::optional<ReadinessClass> parse_readiness_class(std::string_view text);

/// [0, 33) Unlikely, [33, 66) MayBe, [66, 100] HighlyLikely.
ReadinessClass classify(double value);
inline ReadinessClass classify(const ReadinessScore & score) { return classify(score.value); }

/// Subset of SAE levels {1, 2, 3, 4}, stored as bit (level - 1). Only the
/// group-paired sets {}, {1,2}, {3,4} and {1,2,3,4} can be represented.
class SaeLevelSet
{
public:
  static constexpr std::uint8_t kAsdBits = 0x03;
  static constexpr std::uint8_t kAudBits = 0x0C;

  constexpr SaeLevelSet() = default;

  static constexpr bool is_paired(std::uint8_t mask)
  {
    return mask == 0 || mask == kAsdBits || mask == kAudBits || mask == (kAsdBits | kAudBits);
  }
  static std::optional<SaeLevelSet> from_bitmask(std::uint8_t mask);
  static constexpr SaeLevelSet for_groups(bool asd, bool aud)
  {
    return SaeLevelSet(static_cast<std::uint8_t>((asd ? kAsdBits : 0) | (aud ? kAudBits : 0)));
  }
  static constexpr SaeLevelSet all() { return for_groups(true, true); }

  constexpr std::uint8_t bitmask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int level) const
  {
    return level >= 1 && level <= 4 && ((mask_ >> (level - 1)) & 1U) != 0;
  }
  constexpr bool allows(AutomationLevelGroup g) const
  {
    return (mask_ & (g == AutomationLevelGroup::AsD ? kAsdBits : kAudBits)) != 0;
  }
  std::vector<int> levels() const;

  /// Comma-separated ascending levels, e.g. "1,2,3,4"; empty set is "".
  std::string to_string() const;
  /// Inverse of to_string(); also accepts spaces after commas.
  static std::optional<SaeLevelSet> parse(std::string_view text);

  constexpr bool operator==(const SaeLevelSet & other) const = default;

private:
  constexpr explicit SaeLevelSet(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

/// Recommendation threshold. Inclusive by default so that the recommendation
/// rule agrees with the HighlyLikely lower bound.
struct ThresholdPolicy
{
  double threshold = kHighlyLikelyLowerBound;
  bool inclusive = true;

  bool passes(double value) const { return inclusive ? value >= threshold : value > threshold; }
};

/// Throws Error(Validation) unless the threshold lies in (0, 100).
void validate_threshold(const ThresholdPolicy & policy);

struct Recommendation
{
  std::size_t segment_index = 0;
  SaeLevelSet allowed_sae_levels;
  std::array<ReadinessScore, kGroupCount> scores{};
};

/// Each group adds its level pair independently when its score passes.
Recommendation recommend(
  const std::array<ReadinessScore, kGroupCount> & scores, const ThresholdPolicy & policy = {});

/// 100 * sum(w_i * v_i) / sum(w_i * vmax). Accumulates in extended precision
/// with identical summation order for numerator and denominator, so uniform
/// observations map exactly onto 0, 50 and 100. Throws Error(Validation) when
/// the sizes differ or the weight sum is not positive.
double readiness_percentage(std::span<const double> weights, std::span<const Adequacy> values);

/// Dense weights of one group after checking totality, sign and finiteness.
PerAttribute<double> checked_group_weights(const WeightTable & table, AutomationLevelGroup group);

ReadinessScore score_segment(
  const SegmentObservation & obs, const WeightTable & weights, AutomationLevelGroup group);

struct SegmentAssessment
{
  std::size_t segment_index = 0;
  double start_m = 0.0;
  double length_m = 0.0;
  std::array<double, kGroupCount> scores{};
  std::array<ReadinessClass, kGroupCount> classes{};
  SaeLevelSet allowed_sae_levels;

  double score(AutomationLevelGroup g) const { return scores[index_of(g)]; }
  ReadinessClass readiness_class(AutomationLevelGroup g) const { return classes[index_of(g)]; }
  double end_m() const { return start_m + length_m; }
  bool operator==(const SegmentAssessment & other) const = default;
};

struct ScoredCorridor
{
  std::string corridor_id;
  double length_km = 0.0;
  double segment_length_m = kDefaultSegmentLengthM;
  ThresholdPolicy policy;
  std::vector<SegmentAssessment> segments;

  double length_m() const { return length_km * 1000.0; }
};

/// Scores every segment for both groups; data-parallel over segments, output
/// ordered by segment index.
ScoredCorridor score_corridor(
  const CorridorProfile & profile, const WeightTable & weights, const ThresholdPolicy & policy = {});

/// Serial reference built directly on score_segment/classify/recommend.
ScoredCorridor score_corridor_reference(
  const CorridorProfile & profile, const WeightTable & weights, const ThresholdPolicy & policy = {});

// Score profile CSV: optional `#meta {...}` line, then header
// `segment_index,start_km,asd_score,aud_score,asd_class,aud_class,allowed_levels`
// with levels quoted as e.g. "1,2,3,4" or empty. Scores are written at full
// round-trip precision.
std::string format_profile_csv(const ScoredCorridor & scored);
ScoredCorridor parse_profile_csv(std::string_view text, std::string_view source);

// Score profile JSON with the same content plus corridor metadata and policy.
std::string format_profile_json(const ScoredCorridor & scored);
ScoredCorridor parse_profile_json(std::string_view text, std::string_view source);

/// Dispatches on the extension: ".json" is JSON, anything else CSV.
ScoredCorridor load_profile(const std::filesystem::path & path);

/// Fixed-width human-readable table.
std::string format_profile_pretty(const ScoredCorridor & scored);

// Macro-category sensitivity analysis.

enum class SensitivityScenario : std::uint8_t { CompliantNoHd, DegradedWithHd, DegradedNoHd };
inline constexpr std::array<SensitivityScenario, 3> kAllSensitivityScenarios{
  SensitivityScenario::CompliantNoHd, SensitivityScenario::DegradedWithHd,
  SensitivityScenario::DegradedNoHd};

/// "compliant-no-hd", "degraded-with-hd", "degraded-no-hd".
std::string_view to_string(SensitivityScenario s);

struct SensitivityConfig
{
  SensitivityScenario scenario = SensitivityScenario::CompliantNoHd;
  /// Adequacy of the three physical categories when degraded, indexed by
  /// MacroCategory (markings, maintenance, design).
  std::array<Adequacy, 3> degraded_levels{1, 1, 1};
};

/// Category adequacy vector the scenario implies, indexed by MacroCategory.
std::array<Adequacy, kMacroCategoryCount> scenario_adequacy(const SensitivityConfig & config);

/// Readiness per group with categories in place of attributes.
std::array<double, kGroupCount> macro_sensitivity(
  const SensitivityConfig & config, const MacroWeightTable & macro_weights);

struct SensitivityRow
{
  SensitivityScenario scenario;
  AutomationLevelGroup group;
  double score;
  ReadinessClass readiness_class;
};

/// All three scenarios for both groups, scenario-major.
std::vector<SensitivityRow> run_sensitivity(
  const MacroWeightTable & macro_weights, std::array<Adequacy, 3> degraded_levels = {1, 1, 1});

std::string format_sensitivity_csv(std::span<const SensitivityRow> rows);
std::string format_sensitivity_json(std::span<const SensitivityRow> rows);
std::string format_sensitivity_pretty(std::span<const SensitivityRow> rows);

}  // namespace hri

#endif  // HRI__SCORING_HPP_
