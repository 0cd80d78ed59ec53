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

#include "hri/scoring.hpp"

#include "hri/error.hpp"
#include "hri/scoring_kernels.hpp"
#include "scoring_core.hpp"

#include <cmath>
#include <string>

namespace hri
{

std::string_view to_string(ReadinessClass c)
{
  switch (c) {
    case ReadinessClass::Unlikely:
      return "unlikely";
    case ReadinessClass::MayBe:
      return "may-be";
    case ReadinessClass::HighlyLikely:
      return "highly-likely";
  }
  return "?";
}

std::optional<ReadinessClass> parse_readiness_class(std::string_view text)
{
  for (const auto c : {ReadinessClass::Unlikely, ReadinessClass::MayBe, ReadinessClass::HighlyLikely}) {
    if (text == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

ReadinessClass classify(double value)
{
  if (value >= kHighlyLikelyLowerBound) {
    return ReadinessClass::HighlyLikely;
  }
  if (value >= kMayBeLowerBound) {
    return ReadinessClass::MayBe;
  }
  return ReadinessClass::Unlikely;
}

std::optional<SaeLevelSet> SaeLevelSet::from_bitmask(std::uint8_t mask)
{
  if (!is_paired(mask)) {
    return std::nullopt;
  }
  return SaeLevelSet(mask);
}

std::vector<int> SaeLevelSet::levels() const
{
  std::vector<int> out;
  for (int level = 1; level <= 4; ++level) {
    if (contains(level)) {
      out.push_back(level);
    }
  }
  return out;
}

std::string SaeLevelSet::to_string() const
{
  std::string out;
  for (const int level : levels()) {
    if (!out.empty()) {
      out += ',';
    }
    out += static_cast<char>('0' + level);
  }
  return out;
}

std::optional<SaeLevelSet> SaeLevelSet::parse(std::string_view text)
{
  std::uint8_t mask = 0;
  std::size_t i = 0;
  bool expect_level = !text.empty();
  while (i < text.size()) {
    if (!expect_level) {
      if (text[i] != ',') {
        return std::nullopt;
      }
      ++i;
      while (i < text.size() && text[i] == ' ') {
        ++i;
      }
      expect_level = true;
      continue;
    }
    if (text[i] < '1' || text[i] > '4') {
      return std::nullopt;
    }
    const auto bit = static_cast<std::uint8_t>(1U << (text[i] - '1'));
    if ((mask & bit) != 0) {
      return std::nullopt;
    }
    mask |= bit;
    ++i;
    expect_level = false;
  }
  if (expect_level && !text.empty()) {
    return std::nullopt;
  }
  return from_bitmask(mask);
}

void validate_threshold(const ThresholdPolicy & policy)
{
  if (!(policy.threshold > 0.0 && policy.threshold < 100.0)) {
    throw Error(ErrorKind::Validation, "threshold must lie in (0, 100)");
  }
}

Recommendation recommend(
  const std::array<ReadinessScore, kGroupCount> & scores, const ThresholdPolicy & policy)
{
  Recommendation r;
  r.segment_index = scores[0].segment_index;
  r.scores = scores;
  bool pass[kGroupCount] = {false, false};
  for (const auto & s : scores) {
    pass[index_of(s.group)] = policy.passes(s.value);
  }
  r.allowed_sae_levels = SaeLevelSet::for_groups(
    pass[index_of(AutomationLevelGroup::AsD)], pass[index_of(AutomationLevelGroup::AuD)]);
  return r;
}

double readiness_percentage(std::span<const double> weights, std::span<const Adequacy> values)
{
  if (weights.size() != values.size()) {
    throw Error(ErrorKind::Validation, "weight and observation vectors differ in length");
  }
  long double sum = 0.0L;
  for (const double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::Validation, "weights must be finite and non-negative");
    }
    sum += w;
  }
  for (const Adequacy v : values) {
    if (v > kMaxAdequacy) {
      throw Error(ErrorKind::Validation, "adequacy value " + std::to_string(v) + " outside {0,1,2}");
    }
  }
  if (!(sum > 0.0L) || !std::isfinite(static_cast<double>(sum))) {
    throw Error(ErrorKind::Validation, "weight sum must be positive and finite");
  }
  return detail::readiness_unchecked(weights.data(), values.data(), weights.size());
}

PerAttribute<double> checked_group_weights(const WeightTable & table, AutomationLevelGroup group)
{
  const auto w = table.group_weights(group);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw Error(
        ErrorKind::Validation, "weight for (" + std::string(to_string(group)) + ", " +
                                 std::string(to_string(attribute_at(i))) +
                                 ") must be finite and non-negative");
    }
    sum += w[i];
  }
  if (!(sum > 0.0)) {
    throw Error(
      ErrorKind::Validation, "weight sum for " + std::string(to_string(group)) + " is zero");
  }
  return w;
}

ReadinessScore score_segment(
  const SegmentObservation & obs, const WeightTable & weights, AutomationLevelGroup group)
{
  for (const auto v : obs.values) {
    if (v > kMaxAdequacy) {
      throw Error(
        ErrorKind::Validation,
        "segment " + std::to_string(obs.index) + " has adequacy outside {0,1,2}");
    }
  }
  const auto w = checked_group_weights(weights, group);
  return {obs.index, group, readiness_percentage(w, obs.values)};
}

namespace
{

SegmentAssessment assess(
  const SegmentObservation & seg, const std::array<double, kGroupCount> & scores,
  const ThresholdPolicy & policy)
{
  SegmentAssessment a;
  a.segment_index = seg.index;
  a.start_m = seg.start_m;
  a.length_m = seg.length_m;
  a.scores = scores;
  std::array<ReadinessScore, kGroupCount> rs{};
  for (const auto g : kAllGroups) {
    a.classes[index_of(g)] = classify(scores[index_of(g)]);
    rs[index_of(g)] = {seg.index, g, scores[index_of(g)]};
  }
  a.allowed_sae_levels = recommend(rs, policy).allowed_sae_levels;
  return a;
}

ScoredCorridor empty_result(const CorridorProfile & profile, const ThresholdPolicy & policy)
{
  ScoredCorridor out;
  out.corridor_id = profile.corridor_id;
  out.length_km = profile.length_km;
  out.segment_length_m = profile.segment_length_m;
  out.policy = policy;
  out.segments.reserve(profile.segments.size());
  return out;
}

}  // namespace

ScoredCorridor score_corridor(
  const CorridorProfile & profile, const WeightTable & weights, const ThresholdPolicy & policy)
{
  validate_threshold(policy);
  validate_corridor(profile);
  const auto m = to_adequacy_matrix(profile);
  std::array<std::vector<double>, kGroupCount> scores;
  for (const auto g : kAllGroups) {
    const auto w = checked_group_weights(weights, g);
    scores[index_of(g)].resize(m.rows);
    readiness_scores_parallel(m, w, scores[index_of(g)]);
  }
  auto out = empty_result(profile, policy);
  for (std::size_t i = 0; i < m.rows; ++i) {
    out.segments.push_back(assess(
      profile.segments[i],
      {scores[index_of(AutomationLevelGroup::AsD)][i], scores[index_of(AutomationLevelGroup::AuD)][i]},
      policy));
  }
  return out;
}

ScoredCorridor score_corridor_reference(
  const CorridorProfile & profile, const WeightTable & weights, const ThresholdPolicy & policy)
{
  validate_threshold(policy);
  validate_corridor(profile);
  auto out = empty_result(profile, policy);
  for (const auto & seg : profile.segments) {
    std::array<double, kGroupCount> scores{};
    for (const auto g : kAllGroups) {
      scores[index_of(g)] = score_segment(seg, weights, g).value;
    }
    out.segments.push_back(assess(seg, scores, policy));
  }
  return out;
}

}  // namespace hri
