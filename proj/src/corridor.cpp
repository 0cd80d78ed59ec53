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

#include "hri/corridor.hpp"

#include "hri/error.hpp"

#include <algorithm>
#include <cmath>

namespace hri
{
namespace
{

// Chainage comparisons are done in millimetres so that decimal km bounds such
// as 3.3 km partition segments deterministically.
std::int64_t to_mm(double meters) { return std::llround(meters * 1000.0); }

Error invalid(const std::string & message) { return Error(ErrorKind::Validation, message); }

}  // namespace

std::size_t expected_segment_count(double length_km, double segment_length_m)
{
  const auto length_mm = to_mm(length_km * 1000.0);
  const auto seg_mm = to_mm(segment_length_m);
  if (length_mm <= 0 || seg_mm <= 0) {
    return 0;
  }
  return static_cast<std::size_t>((length_mm + seg_mm - 1) / seg_mm);
}

CorridorProfile make_uniform_corridor(
  std::string corridor_id, double length_km, double segment_length_m, Adequacy fill)
{
  CorridorProfile p;
  p.corridor_id = std::move(corridor_id);
  p.length_km = length_km;
  p.segment_length_m = segment_length_m;
  const auto n = expected_segment_count(length_km, segment_length_m);
  p.segments.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SegmentObservation s;
    s.index = i;
    s.start_m = static_cast<double>(i) * segment_length_m;
    s.length_m = std::min(segment_length_m, p.length_m() - s.start_m);
    s.values.fill(fill);
    p.segments.push_back(s);
  }
  return p;
}

void validate_corridor(const CorridorProfile & profile)
{
  if (!(profile.segment_length_m > 0.0) || !(profile.length_km > 0.0)) {
    throw invalid("corridor length and segment length must be positive");
  }
  const auto n = expected_segment_count(profile.length_km, profile.segment_length_m);
  if (profile.segments.size() != n) {
    throw invalid(
      "corridor of " + std::to_string(profile.length_km) + " km at " +
      std::to_string(profile.segment_length_m) + " m needs " + std::to_string(n) +
      " segments, found " + std::to_string(profile.segments.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto & s = profile.segments[i];
    if (s.index != i) {
      throw invalid("segment at position " + std::to_string(i) + " has index " + std::to_string(s.index));
    }
    if (to_mm(s.start_m) != to_mm(static_cast<double>(i) * profile.segment_length_m)) {
      throw invalid("segment " + std::to_string(i) + " does not start at index x segment length");
    }
    const double expected_len =
      std::min(profile.segment_length_m, profile.length_m() - s.start_m);
    if (to_mm(s.length_m) != to_mm(expected_len)) {
      throw invalid("segment " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t a = 0; a < kAttributeCount; ++a) {
      if (s.values[a] > kMaxAdequacy) {
        throw invalid(
          "segment " + std::to_string(i) + " attribute " + std::string(to_string(attribute_at(a))) +
          " has adequacy " + std::to_string(s.values[a]) + " outside {0,1,2}");
      }
    }
  }
}

CorridorProfile apply_overlay(const CorridorProfile & profile, const ScenarioOverlay & overlay)
{
  const auto from = to_mm(overlay.from_km * 1000.0);
  const auto to = to_mm(overlay.to_km * 1000.0);
  if (!(from < to)) {
    throw invalid("overlay '" + overlay.name + "' needs from_km < to_km");
  }
  if (from < 0 || to > to_mm(profile.length_m())) {
    throw invalid(
      "overlay '" + overlay.name + "' range [" + std::to_string(overlay.from_km) + ", " +
      std::to_string(overlay.to_km) + ") km lies outside corridor of " +
      std::to_string(profile.length_km) + " km");
  }
  for (const auto & op : overlay.ops) {
    if (op.value > kMaxAdequacy) {
      throw invalid("overlay '" + overlay.name + "' uses value outside {0,1,2}");
    }
  }
  CorridorProfile out = profile;
  for (auto & seg : out.segments) {
    if (!(to_mm(seg.start_m) < to && to_mm(seg.end_m()) > from)) {
      continue;
    }
    for (const auto & op : overlay.ops) {
      auto & v = seg.values[index_of(op.attribute)];
      v = op.kind == OverlayOp::Kind::Set ? op.value : std::min(v, op.value);
    }
  }
  return out;
}

void validate_rubric_entry(AttributeId attribute, const RubricEntry & entry)
{
  const std::string name(to_string(attribute));
  if (entry.breakpoints.size() != 3) {
    throw invalid("rubric for " + name + " needs exactly 3 breakpoints");
  }
  for (std::size_t k = 0; k < entry.breakpoints.size(); ++k) {
    const auto & bp = entry.breakpoints[k];
    if (!std::isfinite(bp.threshold)) {
      throw invalid("rubric for " + name + " has a non-finite threshold");
    }
    if (k > 0 && !(entry.breakpoints[k - 1].threshold < bp.threshold)) {
      throw invalid("rubric for " + name + " is not strictly monotone in threshold");
    }
    const Adequacy want = entry.direction == RubricDirection::HigherIsBetter
                            ? static_cast<Adequacy>(k)
                            : static_cast<Adequacy>(kMaxAdequacy - k);
    if (bp.level != want) {
      throw invalid(
        "rubric for " + name + " must list levels " +
        (entry.direction == RubricDirection::HigherIsBetter ? "0,1,2" : "2,1,0") +
        " in threshold order");
    }
  }
}

Adequacy operationalize(double measurement, const RubricEntry & entry)
{
  // Closed lower bounds: a value on a threshold belongs to the interval above it.
  Adequacy level = entry.breakpoints.front().level;
  for (const auto & bp : entry.breakpoints) {
    if (measurement >= bp.threshold) {
      level = bp.level;
    }
  }
  return level;
}

std::map<AttributeId, Adequacy> operationalize(
  const std::map<AttributeId, double> & raw, const Rubric & rubric)
{
  std::map<AttributeId, Adequacy> out;
  for (const auto & [attr, value] : raw) {
    const auto it = rubric.find(attr);
    if (it == rubric.end()) {
      throw invalid("no rubric entry for " + std::string(to_string(attr)));
    }
    validate_rubric_entry(attr, it->second);
    out.emplace(attr, operationalize(value, it->second));
  }
  return out;
}

}  // namespace hri
