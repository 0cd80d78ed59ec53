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
#include "hri/ivim.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cstdio>
#include <initializer_list>
#include <limits>

namespace hri
{
namespace
{

// Degrees with exactly seven decimals, the resolution of the wire format.
std::string format_degrees(std::int32_t e7)
{
  const auto mag = e7 < 0 ? -static_cast<std::int64_t>(e7) : static_cast<std::int64_t>(e7);
  char buf[32];
  std::snprintf(
    buf, sizeof buf, "%s%lld.%07lld", e7 < 0 ? "-" : "", static_cast<long long>(mag / 10000000),
    static_cast<long long>(mag % 10000000));
  return buf;
}

class TextReader
{
public:
  explicit TextReader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node & node, const std::string & message) const
  {
    const auto mark = node.Mark();
    const auto line = mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
    const auto col = mark.column >= 0 ? static_cast<std::size_t>(mark.column) + 1 : 0;
    throw ParseError(source_, line, col, message);
  }

  [[noreturn]] void fail_range(const YAML::Node & node, const std::string & message) const
  {
    const auto mark = node.Mark();
    throw ParseError(
      source_, static_cast<std::size_t>(mark.line + 1), static_cast<std::size_t>(mark.column + 1),
      message, ErrorKind::Validation);
  }

  // Requires a map whose keys are exactly `required` plus any of `optional`.
  void check_keys(
    const YAML::Node & map, const std::string & what, std::initializer_list<const char *> required,
    std::initializer_list<const char *> optional = {}) const
  {
    if (!map.IsMap()) {
      fail(map, what + " must be a mapping");
    }
    for (const auto & kv : map) {
      const auto key = kv.first.as<std::string>();
      bool known = false;
      for (const auto * k : required) {
        known = known || key == k;
      }
      for (const auto * k : optional) {
        known = known || key == k;
      }
      if (!known) {
        fail(kv.first, "unexpected key '" + key + "' in " + what);
      }
    }
    for (const auto * k : required) {
      if (!map[k]) {
        fail(map, what + " is missing key '" + k + "'");
      }
    }
  }

  std::string scalar(const YAML::Node & node, const char * field) const
  {
    if (!node.IsScalar()) {
      fail(node, std::string(field) + " must be a scalar");
    }
    return node.Scalar();
  }

  template <class T>
  T integer(const YAML::Node & node, const char * field) const
  {
    const auto text = scalar(node, field);
    T value{};
    const auto * end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec == std::errc::result_out_of_range) {
      fail_range(node, std::string(field) + " out of range");
    }
    if (ec != std::errc() || ptr != end || text.empty() || text[0] == '+') {
      fail(node, std::string(field) + " must be an integer, got '" + text + "'");
    }
    return value;
  }

  // Parses a decimal degree value with at most seven fractional digits into
  // 1e-7 degree units without going through binary floating point.
  std::int32_t degrees(const YAML::Node & node, const char * field, std::int32_t limit) const
  {
    const auto text = scalar(node, field);
    std::size_t i = 0;
    const bool negative = !text.empty() && text[0] == '-';
    if (negative) {
      ++i;
    }
    std::int64_t whole = 0;
    std::size_t whole_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9' && whole_digits < 4) {
      whole = whole * 10 + (text[i] - '0');
      ++i;
      ++whole_digits;
    }
    std::int64_t frac = 0;
    std::size_t frac_digits = 0;
    bool ok = whole_digits > 0;
    if (ok && i < text.size() && text[i] == '.') {
      ++i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9' && frac_digits < 7) {
        frac = frac * 10 + (text[i] - '0');
        ++i;
        ++frac_digits;
      }
      ok = frac_digits > 0;
    }
    if (!ok || i != text.size()) {
      fail(node, std::string(field) + " must be decimal degrees with at most 7 decimals, got '" + text + "'");
    }
    for (; frac_digits < 7; ++frac_digits) {
      frac *= 10;
    }
    const auto e7 = (whole * 10000000 + frac) * (negative ? -1 : 1);
    if (e7 < -limit || e7 > limit) {
      fail_range(
        node, std::string(field) + " " + text + " outside [" + format_degrees(-limit) + ", " +
                format_degrees(limit) + "]");
    }
    return static_cast<std::int32_t>(e7);
  }

  ReadinessClass readiness(const YAML::Node & node, const char * field) const
  {
    const auto text = scalar(node, field);
    const auto c = parse_readiness_class(text);
    if (!c) {
      fail(node, std::string(field) + ": unknown class '" + text + "'");
    }
    return *c;
  }

private:
  std::string source_;
};

}  // namespace

std::string to_canonical_text(const IvimMessage & msg)
{
  validate_ivim(msg);
  std::string out;
  const auto line = [&](const std::string & indent, const std::string & key, const std::string & value) {
    out += indent + key + ": " + value + "\n";
  };
  out += "header:\n";
  line("  ", "protocol_version", std::to_string(msg.header.protocol_version));
  line("  ", "message_type", std::to_string(msg.header.message_type));
  line("  ", "station_id", std::to_string(msg.header.station_id));
  out += "management:\n";
  line("  ", "ivi_identification", std::to_string(msg.management.ivi_identification));
  line("  ", "timestamp_ms", std::to_string(msg.management.timestamp_ms));
  line("  ", "validity_duration_s", std::to_string(msg.management.validity_duration_s));
  line("  ", "ivi_status", std::string(to_string(msg.management.ivi_status)));
  if (msg.location) {
    out += "location:\n";
    line("  ", "latitude", format_degrees(msg.location->latitude_e7));
    line("  ", "longitude", format_degrees(msg.location->longitude_e7));
  }
  if (msg.av) {
    out += "automated_vehicle:\n";
    if (msg.av->zones.empty()) {
      out += "  zones: []\n";
    } else {
      out += "  zones:\n";
    }
    for (const auto & z : msg.av->zones) {
      line("    - ", "start_m", std::to_string(z.start_m));
      line("      ", "end_m", std::to_string(z.end_m));
      std::string levels = "[";
      for (const int l : z.allowed_sae_levels.levels()) {
        levels += (levels.size() > 1 ? ", " : "") + std::to_string(l);
      }
      line("      ", "allowed_sae_levels", levels + "]");
      line("      ", "asd_class", std::string(to_string(z.asd_class)));
      line("      ", "aud_class", std::string(to_string(z.aud_class)));
      line("      ", "asd_score_cpct", std::to_string(z.asd_score_cpct));
      line("      ", "aud_score_cpct", std::to_string(z.aud_score_cpct));
    }
  }
  return out;
}

namespace
{

IvimMessage message_from_yaml(const YAML::Node & root, std::string_view source)
{
  TextReader rd{std::string(source)};
  if (!root || root.IsNull()) {
    throw ParseError(std::string(source), 1, 1, "empty IVIM text");
  }
  rd.check_keys(root, "message", {"header", "management"}, {"location", "automated_vehicle"});

  IvimMessage msg;
  const auto header = root["header"];
  rd.check_keys(header, "header", {"protocol_version", "message_type", "station_id"});
  msg.header.protocol_version = rd.integer<std::uint8_t>(header["protocol_version"], "protocol_version");
  if (msg.header.protocol_version < kIvimMinProtocolVersion ||
      msg.header.protocol_version > kIvimProtocolVersion) {
    rd.fail_range(header["protocol_version"], "unsupported protocol_version");
  }
  msg.header.message_type = rd.integer<std::uint8_t>(header["message_type"], "message_type");
  if (msg.header.message_type != kIvimMessageType) {
    rd.fail_range(header["message_type"], "message_type must be " + std::to_string(kIvimMessageType));
  }
  msg.header.station_id = rd.integer<std::uint32_t>(header["station_id"], "station_id");

  const auto mgmt = root["management"];
  rd.check_keys(
    mgmt, "management", {"ivi_identification", "timestamp_ms", "validity_duration_s", "ivi_status"});
  msg.management.ivi_identification =
    rd.integer<std::uint16_t>(mgmt["ivi_identification"], "ivi_identification");
  msg.management.timestamp_ms = rd.integer<std::uint64_t>(mgmt["timestamp_ms"], "timestamp_ms");
  msg.management.validity_duration_s =
    rd.integer<std::uint32_t>(mgmt["validity_duration_s"], "validity_duration_s");
  const auto status_text = rd.scalar(mgmt["ivi_status"], "ivi_status");
  const auto status = parse_ivi_status(status_text);
  if (!status) {
    rd.fail(mgmt["ivi_status"], "unknown ivi_status '" + status_text + "'");
  }
  msg.management.ivi_status = *status;
  if (*status != IviStatus::Cancellation && msg.management.validity_duration_s == 0) {
    rd.fail_range(mgmt["validity_duration_s"], "validity_duration_s must be positive");
  }

  if (const auto loc = root["location"]) {
    rd.check_keys(loc, "location", {"latitude", "longitude"});
    GeographicLocationContainer g;
    g.latitude_e7 = rd.degrees(loc["latitude"], "latitude", kMaxLatitudeE7);
    g.longitude_e7 = rd.degrees(loc["longitude"], "longitude", kMaxLongitudeE7);
    msg.location = g;
  }

  if (const auto avn = root["automated_vehicle"]) {
    rd.check_keys(avn, "automated_vehicle", {"zones"});
    const auto zones = avn["zones"];
    if (!zones.IsSequence()) {
      rd.fail(zones, "zones must be a sequence");
    }
    if (zones.size() > kMaxZones) {
      rd.fail_range(zones, "more than " + std::to_string(kMaxZones) + " zones");
    }
    AutomatedVehicleContainer av;
    for (const auto & zn : zones) {
      rd.check_keys(
        zn, "zone",
        {"start_m", "end_m", "allowed_sae_levels", "asd_class", "aud_class", "asd_score_cpct",
         "aud_score_cpct"});
      ZoneRecord z;
      z.start_m = rd.integer<std::uint32_t>(zn["start_m"], "start_m");
      z.end_m = rd.integer<std::uint32_t>(zn["end_m"], "end_m");
      if (!(z.start_m < z.end_m)) {
        rd.fail_range(zn["end_m"], "end_m must exceed start_m");
      }
      if (!av.zones.empty() && z.start_m < av.zones.back().end_m) {
        rd.fail_range(zn["start_m"], "zone overlaps or precedes the previous zone");
      }
      const auto lv = zn["allowed_sae_levels"];
      if (!lv.IsSequence()) {
        rd.fail(lv, "allowed_sae_levels must be a sequence");
      }
      std::uint8_t mask = 0;
      for (const auto & l : lv) {
        const auto level = rd.integer<unsigned>(l, "allowed_sae_levels");
        if (level < 1 || level > 4 || (mask & (1U << (level - 1))) != 0) {
          rd.fail(l, "SAE levels must be distinct values in 1..4");
        }
        mask |= static_cast<std::uint8_t>(1U << (level - 1));
      }
      const auto levels = SaeLevelSet::from_bitmask(mask);
      if (!levels) {
        rd.fail_range(lv, "SAE level set violates group pairing");
      }
      z.allowed_sae_levels = *levels;
      z.asd_class = rd.readiness(zn["asd_class"], "asd_class");
      z.aud_class = rd.readiness(zn["aud_class"], "aud_class");
      z.asd_score_cpct = rd.integer<std::uint16_t>(zn["asd_score_cpct"], "asd_score_cpct");
      z.aud_score_cpct = rd.integer<std::uint16_t>(zn["aud_score_cpct"], "aud_score_cpct");
      if (z.asd_score_cpct > kMaxScoreCpct) {
        rd.fail_range(zn["asd_score_cpct"], "score above 100 %");
      }
      if (z.aud_score_cpct > kMaxScoreCpct) {
        rd.fail_range(zn["aud_score_cpct"], "score above 100 %");
      }
      av.zones.push_back(z);
    }
    msg.av = std::move(av);
  }
  validate_ivim(msg);
  return msg;
}

}  // namespace

IvimMessage from_canonical_text(std::string_view text, std::string_view source)
{
  try {
    return message_from_yaml(YAML::Load(std::string(text)), source);
  } catch (const YAML::Exception & e) {
    throw ParseError(
      std::string(source), static_cast<std::size_t>(e.mark.line + 1),
      static_cast<std::size_t>(e.mark.column + 1), e.msg);
  }
}

std::string inspect_summary(const IvimMessage & msg)
{
  std::string out;
  char buf[200];
  std::snprintf(
    buf, sizeof buf, "IVIM v%u  station %u  ivi_id %u  status %s\n",
    static_cast<unsigned>(msg.header.protocol_version), static_cast<unsigned>(msg.header.station_id),
    static_cast<unsigned>(msg.management.ivi_identification),
    std::string(to_string(msg.management.ivi_status)).c_str());
  out += buf;
  std::snprintf(
    buf, sizeof buf, "timestamp_ms %llu  validity %u s\n",
    static_cast<unsigned long long>(msg.management.timestamp_ms),
    static_cast<unsigned>(msg.management.validity_duration_s));
  out += buf;
  if (msg.location) {
    out += "reference point " + format_degrees(msg.location->latitude_e7) + ", " +
           format_degrees(msg.location->longitude_e7) + "\n";
  } else {
    out += "reference point -\n";
  }
  if (!msg.av) {
    out += "automated vehicle container -\n";
    return out;
  }
  std::snprintf(buf, sizeof buf, "zones %zu\n", msg.av->zones.size());
  out += buf;
  std::snprintf(
    buf, sizeof buf, "  %4s %9s %9s  %-7s  %-13s %-13s %7s %7s\n", "#", "start_m", "end_m", "levels",
    "asd_class", "aud_class", "asd_%", "aud_%");
  out += buf;
  for (std::size_t k = 0; k < msg.av->zones.size(); ++k) {
    const auto & z = msg.av->zones[k];
    const auto levels = z.allowed_sae_levels.empty() ? std::string("-") : z.allowed_sae_levels.to_string();
    std::snprintf(
      buf, sizeof buf, "  %4zu %9u %9u  %-7s  %-13s %-13s %7.2f %7.2f\n", k,
      static_cast<unsigned>(z.start_m), static_cast<unsigned>(z.end_m), levels.c_str(),
      std::string(to_string(z.asd_class)).c_str(), std::string(to_string(z.aud_class)).c_str(),
      z.asd_score_cpct / 100.0, z.aud_score_cpct / 100.0);
    out += buf;
  }
  return out;
}

}  // namespace hri
