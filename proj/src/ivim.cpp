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

#include "hri/ivim.hpp"

#include "hri/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace hri
{
namespace
{

Error invalid(const std::string & message) { return Error(ErrorKind::Validation, message); }

std::uint32_t to_chainage(double meters)
{
  const auto v = std::llround(meters);
  if (v < 0 || v > static_cast<long long>(std::numeric_limits<std::uint32_t>::max())) {
    throw invalid("chainage " + std::to_string(meters) + " m does not fit the zone record");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::string_view to_string(IviStatus s)
{
  switch (s) {
    case IviStatus::New:
      return "new";
    case IviStatus::Update:
      return "update";
    case IviStatus::Cancellation:
      return "cancellation";
  }
  return "?";
}

std::optional<IviStatus> parse_ivi_status(std::string_view text)
{
  for (const auto s : {IviStatus::New, IviStatus::Update, IviStatus::Cancellation}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

void validate_ivim(const IvimMessage & msg)
{
  const auto & h = msg.header;
  if (h.message_type != kIvimMessageType) {
    throw invalid("message_type must be " + std::to_string(kIvimMessageType));
  }
  if (h.protocol_version < kIvimMinProtocolVersion || h.protocol_version > kIvimProtocolVersion) {
    throw invalid("unsupported protocol_version " + std::to_string(h.protocol_version));
  }
  const auto & m = msg.management;
  if (static_cast<std::uint8_t>(m.ivi_status) > static_cast<std::uint8_t>(IviStatus::Cancellation)) {
    throw invalid("unknown ivi_status");
  }
  if (m.ivi_status != IviStatus::Cancellation && m.validity_duration_s == 0) {
    throw invalid("validity_duration_s must be positive for new and update messages");
  }
  if (msg.location) {
    const auto & loc = *msg.location;
    if (loc.latitude_e7 < -kMaxLatitudeE7 || loc.latitude_e7 > kMaxLatitudeE7) {
      throw invalid("latitude outside [-90, 90] degrees");
    }
    if (loc.longitude_e7 < -kMaxLongitudeE7 || loc.longitude_e7 > kMaxLongitudeE7) {
      throw invalid("longitude outside [-180, 180] degrees");
    }
  }
  if (msg.av) {
    const auto & zones = msg.av->zones;
    if (zones.size() > kMaxZones) {
      throw invalid("more than " + std::to_string(kMaxZones) + " zones");
    }
    for (std::size_t k = 0; k < zones.size(); ++k) {
      const auto & z = zones[k];
      const auto where = "zone " + std::to_string(k);
      if (!(z.start_m < z.end_m)) {
        throw invalid(where + ": start_m must be below end_m");
      }
      if (k > 0 && z.start_m < zones[k - 1].end_m) {
        throw invalid(where + ": overlaps or precedes the previous zone");
      }
      if (!SaeLevelSet::is_paired(z.allowed_sae_levels.bitmask())) {
        throw invalid(where + ": unpaired SAE level set");
      }
      for (const auto c : {z.asd_class, z.aud_class}) {
        if (static_cast<std::uint8_t>(c) > static_cast<std::uint8_t>(ReadinessClass::HighlyLikely)) {
          throw invalid(where + ": unknown readiness class");
        }
      }
      if (z.asd_score_cpct > kMaxScoreCpct || z.aud_score_cpct > kMaxScoreCpct) {
        throw invalid(where + ": score above 100 %");
      }
    }
  }
}

std::uint16_t to_score_cpct(double score)
{
  if (!(score > 0.0)) {
    return 0;
  }
  const double cpct = std::floor(score * 100.0);
  return cpct >= kMaxScoreCpct ? kMaxScoreCpct : static_cast<std::uint16_t>(cpct);
}

IvimMessage build_ivim(const ScoredCorridor & scored, const BuildOptions & options)
{
  if (scored.segments.empty()) {
    throw Error(ErrorKind::Input, "cannot build an IVIM from an empty score profile");
  }
  IvimMessage msg;
  msg.header.protocol_version = options.protocol_version;
  msg.header.station_id = options.station_id;
  msg.management = {
    options.ivi_identification, options.timestamp_ms, options.validity_duration_s,
    options.ivi_status};
  msg.location = options.location;

  const auto key_of = [](const SegmentAssessment & a) {
    return std::tuple(
      a.allowed_sae_levels.bitmask(), a.readiness_class(AutomationLevelGroup::AsD),
      a.readiness_class(AutomationLevelGroup::AuD));
  };
  AutomatedVehicleContainer av;
  const auto & segs = scored.segments;
  std::size_t begin = 0;
  while (begin < segs.size()) {
    std::size_t end = begin + 1;
    while (end < segs.size() && key_of(segs[end]) == key_of(segs[begin])) {
      ++end;
    }
    ZoneRecord z;
    // Boundaries come from segment starts and the corridor end so that
    // consecutive zones share the exact same rounded chainage.
    z.start_m = to_chainage(segs[begin].start_m);
    z.end_m = to_chainage(end < segs.size() ? segs[end].start_m : scored.length_m());
    z.allowed_sae_levels = segs[begin].allowed_sae_levels;
    z.asd_class = segs[begin].readiness_class(AutomationLevelGroup::AsD);
    z.aud_class = segs[begin].readiness_class(AutomationLevelGroup::AuD);
    double min_asd = segs[begin].score(AutomationLevelGroup::AsD);
    double min_aud = segs[begin].score(AutomationLevelGroup::AuD);
    for (std::size_t i = begin + 1; i < end; ++i) {
      min_asd = std::min(min_asd, segs[i].score(AutomationLevelGroup::AsD));
      min_aud = std::min(min_aud, segs[i].score(AutomationLevelGroup::AuD));
    }
    z.asd_score_cpct = to_score_cpct(min_asd);
    z.aud_score_cpct = to_score_cpct(min_aud);
    av.zones.push_back(z);
    begin = end;
  }
  if (av.zones.size() > kMaxZones) {
    throw invalid(
      "profile coalesces into " + std::to_string(av.zones.size()) + " zones, more than " +
      std::to_string(kMaxZones));
  }
  msg.av = std::move(av);
  validate_ivim(msg);
  return msg;
}

}  // namespace hri
