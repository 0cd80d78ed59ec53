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

#ifndef HRI__IVIM_HPP_
#define HRI__IVIM_HPP_

#include "hri/scoring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hri
{

// Infrastructure-to-vehicle information message carrying allowed SAE levels
// per corridor zone. The binary layout is this toolkit's own deterministic
// big-endian format; it is NOT an ETSI ASN.1/UPER encoding.

inline constexpr std::uint8_t kIvimMessageType = 0x06;
inline constexpr std::uint8_t kIvimProtocolVersion = 2;
inline constexpr std::uint8_t kIvimMinProtocolVersion = 1;

enum class IviStatus : std::uint8_t { New = 0, Update = 1, Cancellation = 2 };
/// "new", "update", "cancellation".
std::string_view to_string(IviStatus s);
std::optional<IviStatus> parse_ivi_status(std::string_view text);

struct IvimHeader
{
  std::uint8_t protocol_version = kIvimProtocolVersion;
  std::uint8_t message_type = kIvimMessageType;
  std::uint32_t station_id = 0;
  bool operator==(const IvimHeader & other) const = default;
};

struct ManagementContainer
{
  std::uint16_t ivi_identification = 0;
  std::uint64_t timestamp_ms = 0;
  std::uint32_t validity_duration_s = 0;
  IviStatus ivi_status = IviStatus::New;
  bool operator==(const ManagementContainer & other) const = default;
};

inline constexpr std::int32_t kMaxLatitudeE7 = 900000000;
inline constexpr std::int32_t kMaxLongitudeE7 = 1800000000;

/// Reference point in 1e-7 degree units; zone extents are chainage offsets
/// from this point.
struct GeographicLocationContainer
{
  std::int32_t latitude_e7 = 0;
  std::int32_t longitude_e7 = 0;
  bool operator==(const GeographicLocationContainer & other) const = default;
};

/// Score percentage times 100; 10000 is 100 %.
inline constexpr std::uint16_t kMaxScoreCpct = 10000;

struct ZoneRecord
{
  std::uint32_t start_m = 0;
  std::uint32_t end_m = 0;
  SaeLevelSet allowed_sae_levels;
  ReadinessClass asd_class = ReadinessClass::Unlikely;
  ReadinessClass aud_class = ReadinessClass::Unlikely;
  std::uint16_t asd_score_cpct = 0;
  std::uint16_t aud_score_cpct = 0;
  bool operator==(const ZoneRecord & other) const = default;
};

inline constexpr std::size_t kMaxZones = 255;

struct AutomatedVehicleContainer
{
  std::vector<ZoneRecord> zones;
  bool operator==(const AutomatedVehicleContainer & other) const = default;
};

struct IvimMessage
{
  IvimHeader header;
  ManagementContainer management;
  std::optional<GeographicLocationContainer> location;
  std::optional<AutomatedVehicleContainer> av;
  bool operator==(const IvimMessage & other) const = default;
};

/// Throws Error(Validation) naming the first violated structural invariant.
void validate_ivim(const IvimMessage & msg);

/// Conservative fixed-point carriage: floor(score * 100), clamped to [0, 10000].
std::uint16_t to_score_cpct(double score);

struct BuildOptions
{
  std::uint32_t station_id = 0;
  std::uint16_t ivi_identification = 1;
  std::uint64_t timestamp_ms = 0;
  std::uint32_t validity_duration_s = 3600;
  IviStatus ivi_status = IviStatus::New;
  std::uint8_t protocol_version = kIvimProtocolVersion;
  std::optional<GeographicLocationContainer> location;
};

/// Coalesces adjacent segments sharing (levels, asd_class, aud_class) into
/// zones that tile [0, corridor length). Zones with an empty level set are
/// kept. Each zone carries the minimum score of its segments.
IvimMessage build_ivim(const ScoredCorridor & scored, const BuildOptions & options);

// Binary codec. Layout, big-endian, no padding:
//   "IVIM" | protocol_version u8 | message_type u8 | station_id u32 | option_flags u8
//   | ivi_identification u16 | timestamp_ms u64 | validity_duration_s u32 | ivi_status u8
//   | [lat i32 | lon i32]                                   (flag bit 0)
//   | [zone_count u8 | zone_count x (start_m u32 | end_m u32 | levels u8
//      | asd_class u8 | aud_class u8 | asd_cpct u16 | aud_cpct u16)]   (flag bit 1)
inline constexpr std::size_t kIvimFixedSize = 26;
inline constexpr std::size_t kIvimLocationSize = 8;
inline constexpr std::size_t kIvimZoneSize = 15;
inline constexpr std::uint8_t kFlagLocation = 0x01;
inline constexpr std::uint8_t kFlagAv = 0x02;

/// Throws Error(Validation) for messages that violate an invariant.
std::vector<std::uint8_t> encode(const IvimMessage & msg);
/// Strict inverse of encode(); throws DecodeError with the failing byte offset.
IvimMessage decode(std::span<const std::uint8_t> bytes);

/// Lowercase hex without separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Canonical text: YAML subset with fixed key order, degrees with 7 decimals.
std::string to_canonical_text(const IvimMessage & msg);
/// Throws ParseError with line/column for malformed or out-of-range input.
IvimMessage from_canonical_text(std::string_view text, std::string_view source = "<text>");

/// Human-readable summary with a zone table.
std::string inspect_summary(const IvimMessage & msg);

}  // namespace hri

#endif  // HRI__IVIM_HPP_
