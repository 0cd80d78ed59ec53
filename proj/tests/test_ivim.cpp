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
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>

namespace hri
{
namespace
{

using G = AutomationLevelGroup;
using Bytes = std::vector<std::uint8_t>;

IvimMessage minimal()
{
  IvimMessage m;
  m.header.station_id = 1;
  m.management.ivi_identification = 1;
  m.management.validity_duration_s = 1;
  return m;
}

TEST(Codec, GoldenMinimalMessage)
{
  const Bytes want{
    'I', 'V', 'I', 'M',      // magic
    0x02,                    // protocol_version
    0x06,                    // message_type
    0x00, 0x00, 0x00, 0x01,  // station_id
    0x00,                    // option flags
    0x00, 0x01,              // ivi_identification
    0, 0, 0, 0, 0, 0, 0, 0,  // timestamp_ms
    0x00, 0x00, 0x00, 0x01,  // validity_duration_s
    0x00};                   // ivi_status
  ASSERT_EQ(want.size(), kIvimFixedSize);
  EXPECT_EQ(encode(minimal()), want);
  EXPECT_EQ(decode(want), minimal());
  EXPECT_EQ(to_hex(want).substr(0, 8), "4956494d");
}

TEST(Codec, GoldenZoneLayout)
{
  auto m = minimal();
  m.location = GeographicLocationContainer{-1, 2};
  m.av = AutomatedVehicleContainer{{ZoneRecord{
    0x010203, 0x040506, SaeLevelSet::all(), ReadinessClass::HighlyLikely, ReadinessClass::MayBe, 10000, 0x1234}}};
  const auto b = encode(m);
  ASSERT_EQ(b.size(), kIvimFixedSize + 8 + 1 + kIvimZoneSize);
  EXPECT_EQ(b[10], kFlagLocation | kFlagAv);
  const Bytes loc(b.begin() + 26, b.begin() + 34);
  EXPECT_EQ(loc, (Bytes{0xFF, 0xFF, 0xFF, 0xFF, 0, 0, 0, 2}));
  const Bytes zone(b.begin() + 35, b.end());
  EXPECT_EQ(b[34], 1);
  EXPECT_EQ(zone, (Bytes{0, 1, 2, 3, 0, 4, 5, 6, 0x0F, 2, 1, 0x27, 0x10, 0x12, 0x34}));
}

TEST(Codec, RandomRoundTrip)
{
  auto g = test::rng(30);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto m = test::random_valid_message(g);
    const auto b = encode(m);
    ASSERT_EQ(decode(b), m) << to_hex(b);
    ASSERT_EQ(encode(decode(b)), b);
  }
}

std::size_t decode_offset(const Bytes & b)
{
  try {
    decode(b);
  } catch (const DecodeError & e) {
    return e.offset();
  }
  return ~std::size_t{0};
}

TEST(Codec, TruncationReportsOffset)
{
  const Bytes three{'I', 'V', 'I'};
  try {
    decode(three);
    FAIL();
  } catch (const DecodeError & e) {
    EXPECT_EQ(e.offset(), 3U);
    EXPECT_NE(std::string(e.what()).find("truncat"), std::string::npos) << e.what();
  }
  const auto full = encode(minimal());
  for (std::size_t n = 0; n < full.size(); ++n) {
    EXPECT_THROW(decode(Bytes(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n))), DecodeError);
  }
}

TEST(Codec, UnpairedBitmaskRejected)
{
  auto m = minimal();
  m.av = AutomatedVehicleContainer{{ZoneRecord{0, 100, SaeLevelSet::all(), ReadinessClass::MayBe,
                                              ReadinessClass::MayBe, 5000, 5000}}};
  auto b = encode(m);
  b[27 + 8] = 0x02;
  EXPECT_EQ(decode_offset(b), 35U);
  try {
    decode(b);
  } catch (const DecodeError & e) {
    EXPECT_NE(std::string(e.what()).find("pairing"), std::string::npos);
  }
}

TEST(Codec, SemanticErrorsRejected)
{
  auto b = encode(minimal());
  b[25] = 3;  // ivi_status
  EXPECT_EQ(decode_offset(b), 25U);
  b = encode(minimal());
  b[24] = 0;  // validity 0 on a new message
  EXPECT_THROW(decode(b), DecodeError);
  b = encode(minimal());
  b.push_back(0);
  EXPECT_EQ(decode_offset(b), 26U);
}

TEST(Codec, EncodeValidates)
{
  auto m = minimal();
  m.location = GeographicLocationContainer{kMaxLatitudeE7 + 1, 0};
  EXPECT_THROW(encode(m), Error);
  m = minimal();
  ZoneRecord a;
  a.end_m = 100;
  ZoneRecord b;
  b.start_m = 50;
  b.end_m = 150;
  m.av = AutomatedVehicleContainer{{a, b}};
  EXPECT_THROW(encode(m), Error);
  m.av = AutomatedVehicleContainer{{ZoneRecord{0, 100, {}, {}, {}, 10001, 0}}};
  EXPECT_THROW(encode(m), Error);
}

std::vector<std::size_t> structural_positions(const IvimMessage & m)
{
  std::vector<std::size_t> pos{0, 1, 2, 3, 5, 10};
  if (m.av) {
    pos.push_back(kIvimFixedSize + (m.location ? 8 : 0));
  }
  return pos;
}

TEST(Fuzz, StructuralBytesNeverMisparse)
{
  auto g = test::rng(31);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto m = test::random_valid_message(g);
    const auto b = encode(m);
    for (const auto p : structural_positions(m)) {
      auto mutated = b;
      mutated[p] = static_cast<std::uint8_t>(byte(g));
      if (mutated == b) {
        ASSERT_EQ(decode(mutated), m);
      } else {
        ASSERT_THROW(decode(mutated), DecodeError) << "position " << p << " " << to_hex(mutated);
      }
    }
  }
}

TEST(Fuzz, AnyByteDecodesCanonicallyOrFails)
{
  auto g = test::rng(32);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 5000; ++trial) {
    auto b = encode(test::random_valid_message(g));
    const auto pos = std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(g);
    b[pos] = static_cast<std::uint8_t>(byte(g));
    try {
      const auto m = decode(b);
      ASSERT_EQ(encode(m), b);
    } catch (const DecodeError & e) {
      ASSERT_LE(e.offset(), b.size());
    }
  }
}

TEST(CanonicalText, RandomRoundTrip)
{
  auto g = test::rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = test::random_valid_message(g);
    const auto text = to_canonical_text(m);
    ASSERT_EQ(from_canonical_text(text), m) << text;
    ASSERT_EQ(to_canonical_text(from_canonical_text(text)), text);
  }
}

TEST(CanonicalText, Layout)
{
  auto m = minimal();
  m.location = GeographicLocationContainer{455000000, -87000001};
  m.av = AutomatedVehicleContainer{};
  const auto text = to_canonical_text(m);
  EXPECT_NE(text.find("  latitude: 45.5000000\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  longitude: -8.7000001\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  zones: []\n"), std::string::npos);
  EXPECT_EQ(text.substr(0, 8), "header:\n");
}

TEST(CanonicalText, LatitudeOutOfRangeIsError)
{
  auto m = minimal();
  m.location = GeographicLocationContainer{0, 0};
  const auto text = std::regex_replace(to_canonical_text(m), std::regex("latitude: [-0-9.]+"), "latitude: 91.0");
  try {
    from_canonical_text(text, "m.yaml");
    FAIL();
  } catch (const Error & e) {
    EXPECT_NE(std::string(e.what()).find("latitude"), std::string::npos) << e.what();
  }
}

TEST(CanonicalText, SyntaxAndUnknownKeys)
{
  EXPECT_THROW(from_canonical_text("header: [", "bad.yaml"), ParseError);
  EXPECT_THROW(from_canonical_text("", "empty.yaml"), ParseError);
  const auto text = to_canonical_text(minimal()) + "extra: 1\n";
  EXPECT_THROW(from_canonical_text(text, "x.yaml"), ParseError);
}

ScoredCorridor scored_fixture(const std::string & overlay)
{
  auto p = load_corridor(test::data_path("d08/baseline.csv"));
  if (!overlay.empty()) {
    p = apply_overlay(p, load_overlay(test::data_path("d08/overlays/" + overlay)));
  }
  return score_corridor(p, builtin_weight_table());
}

TEST(Build, ZonesTileCorridorConservatively)
{
  for (const std::string overlay : {"", "identity.json", "roadworks_km11_17.json", "maintenance_km3_16.json"}) {
    const auto scored = scored_fixture(overlay);
    BuildOptions opt;
    opt.station_id = 7;
    opt.timestamp_ms = 1000;
    const auto m = build_ivim(scored, opt);
    ASSERT_TRUE(m.av.has_value());
    const auto & zones = m.av->zones;
    ASSERT_FALSE(zones.empty());
    EXPECT_EQ(zones.front().start_m, 0U);
    EXPECT_EQ(zones.back().end_m, static_cast<std::uint32_t>(std::llround(scored.length_m())));
    for (std::size_t k = 1; k < zones.size(); ++k) {
      EXPECT_EQ(zones[k].start_m, zones[k - 1].end_m) << overlay;
    }
    for (const auto & s : scored.segments) {
      const auto mid = s.start_m + s.length_m / 2.0;
      const auto it = std::find_if(zones.begin(), zones.end(), [&](const ZoneRecord & z) {
        return z.start_m <= mid && mid < z.end_m;
      });
      ASSERT_NE(it, zones.end());
      EXPECT_EQ(it->allowed_sae_levels, s.allowed_sae_levels);
      EXPECT_EQ(it->asd_class, s.readiness_class(G::AsD));
      EXPECT_EQ(it->aud_class, s.readiness_class(G::AuD));
      EXPECT_LE(it->asd_score_cpct / 100.0, s.score(G::AsD));
      EXPECT_LE(it->aud_score_cpct / 100.0, s.score(G::AuD));
    }
    EXPECT_EQ(decode(encode(m)), m);
  }
}

TEST(Build, ScoresAreFlooredMinimum)
{
  const auto scored = scored_fixture("");
  const auto m = build_ivim(scored, {});
  ASSERT_EQ(m.av->zones.size(), 1U);
  double lo = 100.0;
  for (const auto & s : scored.segments) {
    lo = std::min(lo, s.score(G::AsD));
  }
  EXPECT_EQ(m.av->zones[0].asd_score_cpct, static_cast<std::uint16_t>(std::floor(lo * 100.0)));
  EXPECT_EQ(to_score_cpct(100.0), 10000);
  EXPECT_EQ(to_score_cpct(66.666), 6666);
}

TEST(Build, RoadworksSplitsIntoThreeZones)
{
  const auto m = build_ivim(scored_fixture("roadworks_km11_17.json"), {});
  ASSERT_EQ(m.av->zones.size(), 3U);
  EXPECT_EQ(m.av->zones[1].start_m, 11000U);
  EXPECT_EQ(m.av->zones[1].end_m, 17000U);
  EXPECT_TRUE(m.av->zones[1].allowed_sae_levels.empty());
}

TEST(Build, CarriesOptions)
{
  BuildOptions o;
  o.station_id = 42;
  o.ivi_identification = 9;
  o.timestamp_ms = 123;
  o.location = GeographicLocationContainer{456000000, 87000000};
  const auto m = build_ivim(scored_fixture(""), o);
  EXPECT_EQ(m.header.station_id, 42U);
  EXPECT_EQ(m.management.ivi_identification, 9U);
  EXPECT_EQ(m.management.timestamp_ms, 123U);
  EXPECT_EQ(m.management.validity_duration_s, 3600U);
  EXPECT_EQ(m.location, o.location);
  EXPECT_NE(inspect_summary(m).find("zones"), std::string::npos);
}

}  // namespace
}  // namespace hri
