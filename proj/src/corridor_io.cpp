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
#include "hri/corridor.hpp"
#include "hri/error.hpp"
#include "hri/fileio.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <bitset>
#include <optional>

namespace hri
{
namespace
{

using json_util::json;

constexpr std::string_view kMetaPrefix = "meta ";

struct CorridorMeta
{
  std::optional<std::string> corridor_id;
  std::optional<double> length_km;
  std::optional<double> segment_length_m;
};

CorridorMeta parse_meta(const csv::Table & table)
{
  CorridorMeta meta;
  for (const auto & c : table.comments) {
    if (!c.text.starts_with(kMetaPrefix)) {
      continue;
    }
    const auto j = json_util::parse(std::string_view(c.text).substr(kMetaPrefix.size()), table.source, c.line);
    if (!j.is_object()) {
      throw ParseError(table.source, c.line, 0, "#meta must be a JSON object");
    }
    for (const auto & [key, value] : j.items()) {
      if (key == "corridor_id" && value.is_string()) {
        meta.corridor_id = value.get<std::string>();
      } else if (key == "length_km" && value.is_number()) {
        meta.length_km = value.get<double>();
      } else if (key == "segment_length_m" && value.is_number()) {
        meta.segment_length_m = value.get<double>();
      } else {
        throw ParseError(table.source, c.line, 0, "unexpected #meta key '" + key + "'");
      }
    }
    break;
  }
  return meta;
}

}  // namespace

CorridorProfile parse_corridor_csv(
  std::string_view text, std::string_view source, std::string_view default_id,
  double default_segment_length_m)
{
  const auto table = csv::parse(text, source, {"segment_index", "attribute", "value"});
  const auto meta = parse_meta(table);

  struct Cell
  {
    PerAttribute<Adequacy> values{};
    std::bitset<kAttributeCount> seen;
  };
  std::vector<Cell> cells;
  for (const auto & row : table.rows) {
    const auto idx = csv::to_int(table, row, 0);
    if (idx < 0) {
      throw ParseError(table.source, row.line, 1, "negative segment index");
    }
    const auto attr = parse_attribute(row.fields[1]);
    if (!attr) {
      throw ParseError(table.source, row.line, 2, "unknown attribute '" + row.fields[1] + "'");
    }
    const auto value = csv::to_int(table, row, 2);
    if (value < 0 || value > kMaxAdequacy) {
      throw ParseError(
        table.source, row.line, 3, "adequacy " + std::to_string(value) + " outside {0,1,2}");
    }
    const auto i = static_cast<std::size_t>(idx);
    if (i >= cells.size()) {
      cells.resize(i + 1);
    }
    auto & cell = cells[i];
    if (cell.seen.test(index_of(*attr))) {
      throw ParseError(
        table.source, row.line, 0,
        "duplicate row for segment " + std::to_string(i) + ", attribute " + row.fields[1]);
    }
    cell.seen.set(index_of(*attr));
    cell.values[index_of(*attr)] = static_cast<Adequacy>(value);
  }
  if (cells.empty()) {
    throw Error(ErrorKind::Input, table.source + ": corridor has no segments");
  }

  CorridorProfile profile;
  profile.corridor_id = meta.corridor_id.value_or(std::string(default_id));
  profile.segment_length_m = meta.segment_length_m.value_or(default_segment_length_m);
  if (!(profile.segment_length_m > 0.0)) {
    throw Error(ErrorKind::Input, table.source + ": segment length must be positive");
  }
  profile.length_km = meta.length_km.value_or(
    static_cast<double>(cells.size()) * profile.segment_length_m / 1000.0);

  const auto expected = expected_segment_count(profile.length_km, profile.segment_length_m);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].seen.none()) {
      throw Error(
        ErrorKind::Input, table.source + ": gap: segment index " + std::to_string(i) + " missing");
    }
    if (!cells[i].seen.all()) {
      std::size_t a = 0;
      while (cells[i].seen.test(a)) {
        ++a;
      }
      throw Error(
        ErrorKind::Input, table.source + ": segment " + std::to_string(i) + " has no value for " +
                            std::string(to_string(attribute_at(a))));
    }
  }
  if (cells.size() != expected) {
    throw Error(
      ErrorKind::Input, table.source + ": corridor length " + std::to_string(profile.length_km) +
                          " km at " + std::to_string(profile.segment_length_m) + " m needs " +
                          std::to_string(expected) + " segments, file has " +
                          std::to_string(cells.size()));
  }

  profile.segments.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    SegmentObservation s;
    s.index = i;
    s.start_m = static_cast<double>(i) * profile.segment_length_m;
    s.length_m = std::min(profile.segment_length_m, profile.length_m() - s.start_m);
    s.values = cells[i].values;
    profile.segments.push_back(s);
  }
  return profile;
}

CorridorProfile load_corridor(const std::filesystem::path & path, double default_segment_length_m)
{
  return parse_corridor_csv(
    read_text_file(path), path.string(), path.stem().string(), default_segment_length_m);
}

std::string format_corridor_csv(const CorridorProfile & profile)
{
  json meta = {
    {"corridor_id", profile.corridor_id},
    {"length_km", profile.length_km},
    {"segment_length_m", profile.segment_length_m}};
  std::string out = "#meta " + meta.dump() + "\n";
  out += "segment_index,attribute,value\n";
  for (const auto & s : profile.segments) {
    for (const auto & attr : builtin_attribute_registry()) {
      out += std::to_string(s.index) + "," + std::string(attr.key) + "," +
             std::to_string(s.value(attr.id)) + "\n";
    }
  }
  return out;
}

ScenarioOverlay parse_overlay_json(std::string_view text, std::string_view source)
{
  const auto j = json_util::parse(text, source);
  using VT = json::value_t;
  ScenarioOverlay overlay;
  overlay.name = json_util::require(j, "name", VT::string, source, "overlay").get<std::string>();
  overlay.from_km = json_util::require(j, "from_km", VT::number_float, source, "overlay").get<double>();
  overlay.to_km = json_util::require(j, "to_km", VT::number_float, source, "overlay").get<double>();
  const auto & ops = json_util::require(j, "ops", VT::array, source, "overlay");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto where = "ops[" + std::to_string(k) + "]";
    const auto kind = json_util::require(ops[k], "op", VT::string, source, where).get<std::string>();
    const auto attr_name =
      json_util::require(ops[k], "attribute", VT::string, source, where).get<std::string>();
    const auto & value = json_util::require(ops[k], "value", VT::number_unsigned, source, where);
    OverlayOp op{};
    if (kind == "set") {
      op.kind = OverlayOp::Kind::Set;
    } else if (kind == "cap") {
      op.kind = OverlayOp::Kind::Cap;
    } else {
      throw Error(ErrorKind::Input, std::string(source) + ": " + where + ": unknown op '" + kind + "'");
    }
    const auto attr = parse_attribute(attr_name);
    if (!attr) {
      throw Error(
        ErrorKind::Input, std::string(source) + ": " + where + ": unknown attribute '" + attr_name + "'");
    }
    const auto v = value.get<std::uint64_t>();
    if (v > kMaxAdequacy) {
      throw Error(
        ErrorKind::Input, std::string(source) + ": " + where + ": value " + std::to_string(v) +
                            " outside {0,1,2}");
    }
    op.attribute = *attr;
    op.value = static_cast<Adequacy>(v);
    overlay.ops.push_back(op);
  }
  if (!(overlay.from_km < overlay.to_km)) {
    throw Error(ErrorKind::Input, std::string(source) + ": overlay needs from_km < to_km");
  }
  return overlay;
}

ScenarioOverlay load_overlay(const std::filesystem::path & path)
{
  return parse_overlay_json(read_text_file(path), path.string());
}

Rubric parse_rubric_json(std::string_view text, std::string_view source)
{
  const auto j = json_util::parse(text, source);
  using VT = json::value_t;
  if (!j.is_object()) {
    throw Error(ErrorKind::Input, std::string(source) + ": rubric must be a JSON object");
  }
  Rubric rubric;
  for (const auto & [key, body] : j.items()) {
    const auto attr = parse_attribute(key);
    if (!attr) {
      throw Error(ErrorKind::Input, std::string(source) + ": unknown attribute '" + key + "'");
    }
    RubricEntry entry;
    const auto dir = json_util::require(body, "direction", VT::string, source, key).get<std::string>();
    if (dir == "higher-is-better") {
      entry.direction = RubricDirection::HigherIsBetter;
    } else if (dir == "lower-is-better") {
      entry.direction = RubricDirection::LowerIsBetter;
    } else {
      throw Error(ErrorKind::Input, std::string(source) + ": " + key + ": unknown direction '" + dir + "'");
    }
    if (const auto it = body.find("unit"); it != body.end() && it->is_string()) {
      entry.unit = it->get<std::string>();
    }
    const auto & bps = json_util::require(body, "breakpoints", VT::array, source, key);
    for (const auto & bp : bps) {
      const auto threshold = json_util::require(bp, "threshold", VT::number_float, source, key).get<double>();
      const auto level = json_util::require(bp, "level", VT::number_unsigned, source, key).get<std::uint64_t>();
      if (level > kMaxAdequacy) {
        throw Error(ErrorKind::Input, std::string(source) + ": " + key + ": level outside {0,1,2}");
      }
      entry.breakpoints.push_back({threshold, static_cast<Adequacy>(level)});
    }
    validate_rubric_entry(*attr, entry);
    rubric.emplace(*attr, std::move(entry));
  }
  return rubric;
}

Rubric load_rubric(const std::filesystem::path & path)
{
  return parse_rubric_json(read_text_file(path), path.string());
}

}  // namespace hri
