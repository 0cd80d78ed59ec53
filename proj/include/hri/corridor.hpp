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

#ifndef HRI__CORRIDOR_HPP_
#define HRI__CORRIDOR_HPP_

#include "hri/taxonomy.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hri
{

/// Infrastructure adequacy of one attribute on one segment, in {0, 1, 2}.
using Adequacy = std::uint8_t;
inline constexpr Adequacy kMaxAdequacy = 2;

inline constexpr double kDefaultSegmentLengthM = 100.0;

struct SegmentObservation
{
  std::size_t index = 0;
  double start_m = 0.0;
  /// Nominal segment length, except for a shorter trailing segment.
  double length_m = kDefaultSegmentLengthM;
  PerAttribute<Adequacy> values{};

  double end_m() const { return start_m + length_m; }
  Adequacy value(AttributeId a) const { return values[index_of(a)]; }
  bool operator==(const SegmentObservation & other) const = default;
};

/// A corridor as contiguous fixed-length segments from chainage 0.
struct CorridorProfile
{
  std::string corridor_id;
  double length_km = 0.0;
  double segment_length_m = kDefaultSegmentLengthM;
  std::vector<SegmentObservation> segments;

  double length_m() const { return length_km * 1000.0; }
  bool operator==(const CorridorProfile & other) const = default;
};

/// Number of segments a corridor of the given length is cut into.
std::size_t expected_segment_count(double length_km, double segment_length_m);

/// Builds a geometrically valid profile with every value set to `fill`.
CorridorProfile make_uniform_corridor(
  std::string corridor_id, double length_km, double segment_length_m, Adequacy fill);

/// Throws Error(Validation) describing the first violated profile invariant.
void validate_corridor(const CorridorProfile & profile);

struct OverlayOp
{
  enum class Kind : std::uint8_t { Set, Cap };
  Kind kind;
  AttributeId attribute;
  Adequacy value;
};

/// Declarative attribute mutation over the half-open km range [from_km, to_km).
struct ScenarioOverlay
{
  std::string name;
  double from_km = 0.0;
  double to_km = 0.0;
  std::vector<OverlayOp> ops;
};

/// Returns a new profile where every segment intersecting the overlay range has
/// each `set` applied and each `cap` applied as min(value, cap). Throws
/// Error(Validation) when the range is empty or outside the corridor.
CorridorProfile apply_overlay(const CorridorProfile & profile, const ScenarioOverlay & overlay);

enum class RubricDirection : std::uint8_t { HigherIsBetter, LowerIsBetter };

struct Breakpoint
{
  double threshold;
  Adequacy level;
};

/// Maps a raw measurement onto an adequacy level. The three breakpoints have
/// strictly increasing thresholds; level k covers [threshold_k, threshold_k+1)
/// and values below the first threshold take the first level.
struct RubricEntry
{
  RubricDirection direction = RubricDirection::HigherIsBetter;
  std::string unit;
  std::vector<Breakpoint> breakpoints;
};

using Rubric = std::map<AttributeId, RubricEntry>;

/// Throws Error(Validation) for a rubric entry that is not monotone or does
/// not use each level exactly once in the order its direction requires.
void validate_rubric_entry(AttributeId attribute, const RubricEntry & entry);

Adequacy operationalize(double measurement, const RubricEntry & entry);

/// Maps every raw measurement through its rubric entry. Throws
/// Error(Validation) when an attribute has no entry or an entry is malformed.
std::map<AttributeId, Adequacy> operationalize(
  const std::map<AttributeId, double> & raw, const Rubric & rubric);

// Corridor CSV: optional first line `#meta {"corridor_id":..,"length_km":..,
// "segment_length_m":..}`, then header `segment_index,attribute,value` with one
// row per (segment, attribute) in any order. Without metadata the id is
// `default_id`, the segment length `default_segment_length_m`, and the length
// follows from the segment count.
CorridorProfile parse_corridor_csv(
  std::string_view text, std::string_view source, std::string_view default_id = "corridor",
  double default_segment_length_m = kDefaultSegmentLengthM);
CorridorProfile load_corridor(
  const std::filesystem::path & path, double default_segment_length_m = kDefaultSegmentLengthM);
std::string format_corridor_csv(const CorridorProfile & profile);

// Overlay JSON: {"name", "from_km", "to_km", "ops": [{"op": "set"|"cap", "attribute", "value"}]}
ScenarioOverlay parse_overlay_json(std::string_view text, std::string_view source);
ScenarioOverlay load_overlay(const std::filesystem::path & path);

// Rubric JSON: {"<attribute>": {"direction": "higher-is-better"|"lower-is-better",
//   "unit": "...", "breakpoints": [{"threshold": t, "level": l}, ...]}, ...}
Rubric parse_rubric_json(std::string_view text, std::string_view source);
Rubric load_rubric(const std::filesystem::path & path);

}  // namespace hri

#endif  // HRI__CORRIDOR_HPP_
