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

#include <array>

namespace hri
{
namespace
{

constexpr std::array<std::uint8_t, 4> kMagic{'I', 'V', 'I', 'M'};

class Writer
{
public:
  explicit Writer(std::size_t reserve) { out_.reserve(reserve); }

  template <class T>
  void put(T value)
  {
    using U = std::make_unsigned_t<T>;
    const auto u = static_cast<U>(value);
    for (int shift = static_cast<int>(sizeof(T) - 1) * 8; shift >= 0; shift -= 8) {
      out_.push_back(static_cast<std::uint8_t>(u >> shift));
    }
  }

  std::vector<std::uint8_t> take() { return std::move(out_); }

private:
  std::vector<std::uint8_t> out_;
};

class Reader
{
public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <class T>
  T get(const char * field)
  {
    if (bytes_.size() - pos_ < sizeof(T)) {
      throw DecodeError(
        pos_, std::string("truncated input reading ") + field + " (" + std::to_string(sizeof(T)) +
                " bytes needed, " + std::to_string(bytes_.size() - pos_) + " left)");
    }
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u = static_cast<std::make_unsigned_t<T>>((u << 8) | bytes_[pos_ + i]);
    }
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode(const IvimMessage & msg)
{
  validate_ivim(msg);
  const std::size_t zones = msg.av ? msg.av->zones.size() : 0;
  Writer w(kIvimFixedSize + kIvimLocationSize + 1 + zones * kIvimZoneSize);
  for (const auto b : kMagic) {
    w.put(b);
  }
  w.put(msg.header.protocol_version);
  w.put(msg.header.message_type);
  w.put(msg.header.station_id);
  std::uint8_t flags = 0;
  if (msg.location) {
    flags |= kFlagLocation;
  }
  if (msg.av) {
    flags |= kFlagAv;
  }
  w.put(flags);
  w.put(msg.management.ivi_identification);
  w.put(msg.management.timestamp_ms);
  w.put(msg.management.validity_duration_s);
  w.put(static_cast<std::uint8_t>(msg.management.ivi_status));
  if (msg.location) {
    w.put(msg.location->latitude_e7);
    w.put(msg.location->longitude_e7);
  }
  if (msg.av) {
    w.put(static_cast<std::uint8_t>(zones));
    for (const auto & z : msg.av->zones) {
      w.put(z.start_m);
      w.put(z.end_m);
      w.put(z.allowed_sae_levels.bitmask());
      w.put(static_cast<std::uint8_t>(z.asd_class));
      w.put(static_cast<std::uint8_t>(z.aud_class));
      w.put(z.asd_score_cpct);
      w.put(z.aud_score_cpct);
    }
  }
  return w.take();
}

IvimMessage decode(std::span<const std::uint8_t> bytes)
{
  Reader r(bytes);
  IvimMessage msg;
  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    const auto at = r.pos();
    if (r.get<std::uint8_t>("magic") != kMagic[i]) {
      throw DecodeError(at, "bad magic, expected \"IVIM\"");
    }
  }
  auto at = r.pos();
  msg.header.protocol_version = r.get<std::uint8_t>("protocol_version");
  if (msg.header.protocol_version < kIvimMinProtocolVersion ||
      msg.header.protocol_version > kIvimProtocolVersion) {
    throw DecodeError(at, "unsupported protocol_version " + std::to_string(msg.header.protocol_version));
  }
  at = r.pos();
  msg.header.message_type = r.get<std::uint8_t>("message_type");
  if (msg.header.message_type != kIvimMessageType) {
    throw DecodeError(at, "message_type " + std::to_string(msg.header.message_type) + " is not IVIM");
  }
  msg.header.station_id = r.get<std::uint32_t>("station_id");
  at = r.pos();
  const auto flags = r.get<std::uint8_t>("option_flags");
  if ((flags & ~(kFlagLocation | kFlagAv)) != 0) {
    throw DecodeError(at, "unknown container flag bits in option_flags");
  }
  msg.management.ivi_identification = r.get<std::uint16_t>("ivi_identification");
  msg.management.timestamp_ms = r.get<std::uint64_t>("timestamp_ms");
  at = r.pos();
  msg.management.validity_duration_s = r.get<std::uint32_t>("validity_duration_s");
  const auto validity_at = at;
  at = r.pos();
  const auto status = r.get<std::uint8_t>("ivi_status");
  if (status > static_cast<std::uint8_t>(IviStatus::Cancellation)) {
    throw DecodeError(at, "unknown ivi_status " + std::to_string(status));
  }
  msg.management.ivi_status = static_cast<IviStatus>(status);
  if (msg.management.ivi_status != IviStatus::Cancellation && msg.management.validity_duration_s == 0) {
    throw DecodeError(validity_at, "validity_duration_s must be positive for new and update messages");
  }
  if ((flags & kFlagLocation) != 0) {
    GeographicLocationContainer loc;
    at = r.pos();
    loc.latitude_e7 = r.get<std::int32_t>("latitude");
    if (loc.latitude_e7 < -kMaxLatitudeE7 || loc.latitude_e7 > kMaxLatitudeE7) {
      throw DecodeError(at, "latitude outside [-90, 90] degrees");
    }
    at = r.pos();
    loc.longitude_e7 = r.get<std::int32_t>("longitude");
    if (loc.longitude_e7 < -kMaxLongitudeE7 || loc.longitude_e7 > kMaxLongitudeE7) {
      throw DecodeError(at, "longitude outside [-180, 180] degrees");
    }
    msg.location = loc;
  }
  if ((flags & kFlagAv) != 0) {
    const auto count_at = r.pos();
    const auto count = r.get<std::uint8_t>("zone_count");
    if (r.remaining() < static_cast<std::size_t>(count) * kIvimZoneSize) {
      throw DecodeError(
        count_at, "zone_count " + std::to_string(count) + " needs " +
                    std::to_string(count * kIvimZoneSize) + " bytes, " +
                    std::to_string(r.remaining()) + " left (truncated input)");
    }
    AutomatedVehicleContainer av;
    for (std::size_t k = 0; k < count; ++k) {
      ZoneRecord z;
      const auto zone_at = r.pos();
      const auto where = "zone " + std::to_string(k) + ": ";
      z.start_m = r.get<std::uint32_t>("start_m");
      z.end_m = r.get<std::uint32_t>("end_m");
      if (!(z.start_m < z.end_m)) {
        throw DecodeError(zone_at, where + "start_m must be below end_m");
      }
      if (k > 0 && z.start_m < av.zones.back().end_m) {
        throw DecodeError(zone_at, where + "zone ordering violation (overlaps previous zone)");
      }
      at = r.pos();
      const auto mask = r.get<std::uint8_t>("levels_bitmask");
      const auto levels = SaeLevelSet::from_bitmask(mask);
      if (!levels) {
        throw DecodeError(at, where + "level bitmask " + std::to_string(mask) + " violates group pairing");
      }
      z.allowed_sae_levels = *levels;
      for (auto * cls : {&z.asd_class, &z.aud_class}) {
        at = r.pos();
        const auto c = r.get<std::uint8_t>("class");
        if (c > static_cast<std::uint8_t>(ReadinessClass::HighlyLikely)) {
          throw DecodeError(at, where + "unknown readiness class " + std::to_string(c));
        }
        *cls = static_cast<ReadinessClass>(c);
      }
      for (auto * cpct : {&z.asd_score_cpct, &z.aud_score_cpct}) {
        at = r.pos();
        *cpct = r.get<std::uint16_t>("score_cpct");
        if (*cpct > kMaxScoreCpct) {
          throw DecodeError(at, where + "score above 100 %");
        }
      }
      av.zones.push_back(z);
    }
    msg.av = std::move(av);
  }
  if (r.remaining() != 0) {
    throw DecodeError(r.pos(), std::to_string(r.remaining()) + " trailing bytes");
  }
  return msg;
}

std::string to_hex(std::span<const std::uint8_t> bytes)
{
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const auto b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0x0F];
  }
  return out;
}

}  // namespace hri
