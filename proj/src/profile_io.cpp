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
#include "hri/scoring.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hri
{
namespace
{

using json_util::json;

constexpr std::string_view kMetaPrefix = "meta ";

json meta_json(const ScoredCorridor & s)
{
  return {
    {"corridor_id", s.corridor_id},
    {"length_km", s.length_km},
    {"segment_length_m", s.segment_length_m},
    {"threshold", s.policy.threshold},
    {"threshold_inclusive", s.policy.inclusive},
  };
}

// Reads the metadata members shared by the CSV header line and the JSON form.
void apply_meta(const json & j, ScoredCorridor & out, std::string_view source)
{
  using VT = json::value_t;
  out.corridor_id = json_util::require(j, "corridor_id", VT::string, source, "metadata").get<std::string>();
  out.length_km = json_util::require(j, "length_km", VT::number_float, source, "metadata").get<double>();
  out.segment_length_m =
    json_util::require(j, "segment_length_m", VT::number_float, source, "metadata").get<double>();
  out.policy.threshold =
    json_util::require(j, "threshold", VT::number_float, source, "metadata").get<double>();
  out.policy.inclusive =
    json_util::require(j, "threshold_inclusive", VT::boolean, source, "metadata").get<bool>();
}

// Checks geometry, bounds and derived fields of a parsed profile.
void check_profile(const ScoredCorridor & s, std::string_view source)
{
  const auto fail = [&](const std::string & msg) {
    return Error(ErrorKind::Validation, std::string(source) + ": " + msg);
  };
  if (s.segments.empty()) {
    throw fail("score profile has no segments");
  }
  if (!(s.segment_length_m > 0.0) || !(s.length_km > 0.0)) {
    throw fail("corridor and segment lengths must be positive");
  }
  validate_threshold(s.policy);
  const auto n = expected_segment_count(s.length_km, s.segment_length_m);
  if (n != s.segments.size()) {
    throw fail(
      "corridor length needs " + std::to_string(n) + " segments, profile has " +
      std::to_string(s.segments.size()));
  }
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto & a = s.segments[i];
    const auto where = "segment " + std::to_string(i);
    if (a.segment_index != i) {
      throw fail(where + ": expected index " + std::to_string(i) + ", found " + std::to_string(a.segment_index));
    }
    for (const auto g : kAllGroups) {
      const double v = a.score(g);
      if (!(v >= 0.0 && v <= 100.0)) {
        throw fail(where + ": score outside [0, 100]");
      }
      if (a.readiness_class(g) != classify(v)) {
        throw fail(where + ": class does not match score for " + std::string(to_string(g)));
      }
    }
    std::array<ReadinessScore, kGroupCount> rs{};
    for (const auto g : kAllGroups) {
      rs[index_of(g)] = {i, g, a.score(g)};
    }
    if (recommend(rs, s.policy).allowed_sae_levels != a.allowed_sae_levels) {
      throw fail(where + ": allowed levels do not match scores and threshold");
    }
  }
}

void fill_geometry(ScoredCorridor & s)
{
  for (auto & a : s.segments) {
    a.start_m = static_cast<double>(a.segment_index) * s.segment_length_m;
    a.length_m = std::min(s.segment_length_m, s.length_m() - a.start_m);
  }
}

}  // namespace

std::string format_profile_csv(const ScoredCorridor & scored)
{
  std::string out = "#meta " + meta_json(scored).dump() + "\n";
  out += "segment_index,start_km,asd_score,aud_score,asd_class,aud_class,allowed_levels\n";
  for (const auto & a : scored.segments) {
    out += std::to_string(a.segment_index) + "," + csv::format_double(a.start_m / 1000.0) + "," +
           csv::format_double(a.score(AutomationLevelGroup::AsD)) + "," +
           csv::format_double(a.score(AutomationLevelGroup::AuD)) + "," +
           std::string(to_string(a.readiness_class(AutomationLevelGroup::AsD))) + "," +
           std::string(to_string(a.readiness_class(AutomationLevelGroup::AuD))) + ",\"" +
           a.allowed_sae_levels.to_string() + "\"\n";
  }
  return out;
}

ScoredCorridor parse_profile_csv(std::string_view text, std::string_view source)
{
  const auto table = csv::parse(
    text, source,
    {"segment_index", "start_km", "asd_score", "aud_score", "asd_class", "aud_class",
     "allowed_levels"});
  ScoredCorridor out;
  bool have_meta = false;
  for (const auto & c : table.comments) {
    if (c.text.starts_with(kMetaPrefix)) {
      apply_meta(
        json_util::parse(std::string_view(c.text).substr(kMetaPrefix.size()), table.source, c.line), out,
        table.source);
      have_meta = true;
      break;
    }
  }
  for (const auto & row : table.rows) {
    SegmentAssessment a;
    const auto idx = csv::to_int(table, row, 0);
    if (idx < 0) {
      throw ParseError(table.source, row.line, 1, "negative segment index");
    }
    a.segment_index = static_cast<std::size_t>(idx);
    a.start_m = csv::to_double(table, row, 1) * 1000.0;
    a.scores[index_of(AutomationLevelGroup::AsD)] = csv::to_double(table, row, 2);
    a.scores[index_of(AutomationLevelGroup::AuD)] = csv::to_double(table, row, 3);
    for (std::size_t k = 0; k < kGroupCount; ++k) {
      const auto cls = parse_readiness_class(row.fields[4 + k]);
      if (!cls) {
        throw ParseError(table.source, row.line, 5 + k, "unknown class '" + row.fields[4 + k] + "'");
      }
      a.classes[k] = *cls;
    }
    const auto levels = SaeLevelSet::parse(row.fields[6]);
    if (!levels) {
      throw ParseError(table.source, row.line, 7, "invalid level set '" + row.fields[6] + "'");
    }
    a.allowed_sae_levels = *levels;
    out.segments.push_back(a);
  }
  if (!have_meta) {
    // Without metadata, assume the default policy and infer geometry from the rows.
    out.corridor_id = "corridor";
    if (out.segments.size() >= 2) {
      out.segment_length_m = out.segments[1].start_m - out.segments[0].start_m;
    }
    out.length_km = static_cast<double>(out.segments.size()) * out.segment_length_m / 1000.0;
  }
  for (const auto & a : out.segments) {
    const double want = static_cast<double>(a.segment_index) * out.segment_length_m;
    if (std::fabs(a.start_m - want) > 1e-3) {
      throw Error(
        ErrorKind::Validation, std::string(source) + ": segment " + std::to_string(a.segment_index) +
                                 " start_km does not match index x segment length");
    }
  }
  fill_geometry(out);
  check_profile(out, source);
  return out;
}

std::string format_profile_json(const ScoredCorridor & scored)
{
  auto segs = json::array();
  for (const auto & a : scored.segments) {
    segs.push_back({
      {"segment_index", a.segment_index},
      {"start_m", a.start_m},
      {"length_m", a.length_m},
      {"asd_score", a.score(AutomationLevelGroup::AsD)},
      {"aud_score", a.score(AutomationLevelGroup::AuD)},
      {"asd_class", to_string(a.readiness_class(AutomationLevelGroup::AsD))},
      {"aud_class", to_string(a.readiness_class(AutomationLevelGroup::AuD))},
      {"allowed_levels", a.allowed_sae_levels.levels()},
    });
  }
  auto j = meta_json(scored);
  j["segments"] = std::move(segs);
  return j.dump(2) + "\n";
}

ScoredCorridor parse_profile_json(std::string_view text, std::string_view source)
{
  using VT = json::value_t;
  const auto j = json_util::parse(text, source);
  ScoredCorridor out;
  apply_meta(j, out, source);
  const auto & segs = json_util::require(j, "segments", VT::array, source, "profile");
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto where = "segments[" + std::to_string(k) + "]";
    const auto & e = segs[k];
    SegmentAssessment a;
    a.segment_index = json_util::require(e, "segment_index", VT::number_unsigned, source, where).get<std::size_t>();
    a.scores[index_of(AutomationLevelGroup::AsD)] =
      json_util::require(e, "asd_score", VT::number_float, source, where).get<double>();
    a.scores[index_of(AutomationLevelGroup::AuD)] =
      json_util::require(e, "aud_score", VT::number_float, source, where).get<double>();
    const char * class_keys[kGroupCount] = {"asd_class", "aud_class"};
    for (std::size_t g = 0; g < kGroupCount; ++g) {
      const auto name = json_util::require(e, class_keys[g], VT::string, source, where).get<std::string>();
      const auto cls = parse_readiness_class(name);
      if (!cls) {
        throw Error(ErrorKind::Input, std::string(source) + ": " + where + ": unknown class '" + name + "'");
      }
      a.classes[g] = *cls;
    }
    std::uint8_t mask = 0;
    for (const auto & lv : json_util::require(e, "allowed_levels", VT::array, source, where)) {
      if (!lv.is_number_unsigned() || lv.get<unsigned>() < 1 || lv.get<unsigned>() > 4) {
        throw Error(ErrorKind::Input, std::string(source) + ": " + where + ": levels must be 1..4");
      }
      mask |= static_cast<std::uint8_t>(1U << (lv.get<unsigned>() - 1));
    }
    const auto levels = SaeLevelSet::from_bitmask(mask);
    if (!levels) {
      throw Error(ErrorKind::Validation, std::string(source) + ": " + where + ": unpaired level set");
    }
    a.allowed_sae_levels = *levels;
    out.segments.push_back(a);
  }
  fill_geometry(out);
  check_profile(out, source);
  return out;
}

ScoredCorridor load_profile(const std::filesystem::path & path)
{
  const auto text = read_text_file(path);
  if (path.extension() == ".json") {
    return parse_profile_json(text, path.string());
  }
  return parse_profile_csv(text, path.string());
}

std::string format_profile_pretty(const ScoredCorridor & scored)
{
  std::string out = "corridor: " + scored.corridor_id + "\n";
  char buf[160];
  std::snprintf(
    buf, sizeof buf, "%7s %9s %8s %8s  %-13s %-13s %s\n", "segment", "start_km", "asd", "aud",
    "asd_class", "aud_class", "levels");
  out += buf;
  for (const auto & a : scored.segments) {
    std::snprintf(
      buf, sizeof buf, "%7zu %9.3f %8.2f %8.2f  %-13s %-13s %s\n", a.segment_index,
      a.start_m / 1000.0, a.score(AutomationLevelGroup::AsD), a.score(AutomationLevelGroup::AuD),
      std::string(to_string(a.readiness_class(AutomationLevelGroup::AsD))).c_str(),
      std::string(to_string(a.readiness_class(AutomationLevelGroup::AuD))).c_str(),
      a.allowed_sae_levels.empty() ? "-" : a.allowed_sae_levels.to_string().c_str());
    out += buf;
  }
  return out;
}

}  // namespace hri
