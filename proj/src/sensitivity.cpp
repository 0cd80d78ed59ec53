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
#include "hri/scoring.hpp"
#include "json_util.hpp"

#include <cstdio>

namespace hri
{

std::string_view to_string(SensitivityScenario s)
{
  switch (s) {
    case SensitivityScenario::CompliantNoHd:
      return "compliant-no-hd";
    case SensitivityScenario::DegradedWithHd:
      return "degraded-with-hd";
    case SensitivityScenario::DegradedNoHd:
      return "degraded-no-hd";
  }
  return "?";
}

std::array<Adequacy, kMacroCategoryCount> scenario_adequacy(const SensitivityConfig & config)
{
  for (const auto v : config.degraded_levels) {
    if (v > kMaxAdequacy) {
      throw Error(ErrorKind::Validation, "degraded adequacy level outside {0,1,2}");
    }
  }
  std::array<Adequacy, kMacroCategoryCount> v{};
  const bool degraded = config.scenario != SensitivityScenario::CompliantNoHd;
  for (std::size_t c = 0; c < 3; ++c) {
    v[c] = degraded ? config.degraded_levels[c] : kMaxAdequacy;
  }
  v[index_of(MacroCategory::PreloadedHdMaps)] =
    config.scenario == SensitivityScenario::DegradedWithHd ? kMaxAdequacy : 0;
  return v;
}

std::array<double, kGroupCount> macro_sensitivity(
  const SensitivityConfig & config, const MacroWeightTable & macro_weights)
{
  const auto v = scenario_adequacy(config);
  std::array<double, kGroupCount> out{};
  for (const auto g : kAllGroups) {
    out[index_of(g)] = readiness_percentage(macro_weights.group_weights(g), v);
  }
  return out;
}

std::vector<SensitivityRow> run_sensitivity(
  const MacroWeightTable & macro_weights, std::array<Adequacy, 3> degraded_levels)
{
  std::vector<SensitivityRow> rows;
  for (const auto s : kAllSensitivityScenarios) {
    const auto scores = macro_sensitivity({s, degraded_levels}, macro_weights);
    for (const auto g : kAllGroups) {
      rows.push_back({s, g, scores[index_of(g)], classify(scores[index_of(g)])});
    }
  }
  return rows;
}

std::string format_sensitivity_csv(std::span<const SensitivityRow> rows)
{
  std::string out = "scenario,group,score,class\n";
  for (const auto & r : rows) {
    out += std::string(to_string(r.scenario)) + "," + std::string(to_string(r.group)) + "," +
           csv::format_double(r.score) + "," + std::string(to_string(r.readiness_class)) + "\n";
  }
  return out;
}

std::string format_sensitivity_json(std::span<const SensitivityRow> rows)
{
  auto arr = json_util::json::array();
  for (const auto & r : rows) {
    arr.push_back({
      {"scenario", to_string(r.scenario)},
      {"group", to_string(r.group)},
      {"score", r.score},
      {"class", to_string(r.readiness_class)},
    });
  }
  return json_util::json{{"scenarios", arr}}.dump(2) + "\n";
}

std::string format_sensitivity_pretty(std::span<const SensitivityRow> rows)
{
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-18s %-5s %8s  %s\n", "scenario", "group", "score", "class");
  out += buf;
  for (const auto & r : rows) {
    std::snprintf(
      buf, sizeof buf, "%-18s %-5s %8.2f  %s\n", std::string(to_string(r.scenario)).c_str(),
      std::string(to_string(r.group)).c_str(), r.score,
      std::string(to_string(r.readiness_class)).c_str());
    out += buf;
  }
  return out;
}

}  // namespace hri
