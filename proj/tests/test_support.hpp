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

#ifndef HRI__TEST_SUPPORT_HPP_
#define HRI__TEST_SUPPORT_HPP_

#include "hri/corridor.hpp"
#include "hri/ivim.hpp"
#include "hri/taxonomy.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace hri::test
{

inline std::filesystem::path data_path(const std::string & relative)
{
  return std::filesystem::path(HRI_DATA_DIR) / relative;
}

/// Fixed-seed generator so every property run is reproducible.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5EED0000ULL + salt); }

inline Adequacy random_adequacy(std::mt19937_64 & g)
{
  return static_cast<Adequacy>(std::uniform_int_distribution<int>(0, kMaxAdequacy)(g));
}

inline SegmentObservation random_observation(std::mt19937_64 & g, std::size_t index = 0)
{
  SegmentObservation s;
  s.index = index;
  s.start_m = static_cast<double>(index) * kDefaultSegmentLengthM;
  for (auto & v : s.values) {
    v = random_adequacy(g);
  }
  return s;
}

/// Valid table with non-negative weights on a 0.05 grid; some entries may be
/// zero but each group keeps a positive sum.
inline WeightTable random_weight_table(std::mt19937_64 & g)
{
  WeightTable t;
  std::uniform_int_distribution<int> units(0, 40);
  for (const auto grp : kAllGroups) {
    for (std::size_t i = 0; i < kAttributeCount; ++i) {
      t.set(grp, attribute_at(i), units(g) * 0.05);
    }
    t.set(grp, attribute_at(std::uniform_int_distribution<std::size_t>(0, kAttributeCount - 1)(g)), 1.0);
  }
  return t;
}

/// Independent readiness evaluation: plain double sums in a single pass.
inline double oracle_readiness(const std::vector<double> & w, const std::vector<int> & v)
{
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    num += w[i] * v[i];
    den += w[i] * 2.0;
  }
  return 100.0 * num / den;
}

/// Exact readiness for weights given in integer twentieths: 50 * sum(W v) / sum(W).
inline std::pair<long long, long long> oracle_readiness_exact(
  const std::vector<long long> & w20, const std::vector<int> & v)
{
  long long num = 0;
  long long den = 0;
  for (std::size_t i = 0; i < w20.size(); ++i) {
    num += w20[i] * v[i];
    den += w20[i];
  }
  return {50 * num, den};
}

/// Rows of data/d08/oracle_scores.csv keyed by (scenario, segment), read
/// without the library's CSV reader.
inline std::map<std::pair<std::string, std::size_t>, std::pair<double, double>> load_oracle_scores()
{
  std::ifstream in(data_path("d08/oracle_scores.csv"));
  std::map<std::pair<std::string, std::size_t>, std::pair<double, double>> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    std::stringstream ss(line);
    std::string scenario, idx, asd, aud;
    std::getline(ss, scenario, ',');
    std::getline(ss, idx, ',');
    std::getline(ss, asd, ',');
    std::getline(ss, aud, ',');
    out[{scenario, std::stoul(idx)}] = {std::stod(asd), std::stod(aud)};
  }
  return out;
}

inline IvimMessage random_valid_message(std::mt19937_64 & g)
{
  auto u = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(g);
  };
  IvimMessage m;
  m.header.protocol_version = static_cast<std::uint8_t>(u(1, 2));
  m.header.station_id = static_cast<std::uint32_t>(u(0, 0xFFFFFFFFULL));
  m.management.ivi_identification = static_cast<std::uint16_t>(u(0, 0xFFFF));
  m.management.timestamp_ms = u(0, ~0ULL);
  m.management.ivi_status = static_cast<IviStatus>(u(0, 2));
  m.management.validity_duration_s = static_cast<std::uint32_t>(
    m.management.ivi_status == IviStatus::Cancellation ? u(0, 0xFFFFFFFFULL) : u(1, 0xFFFFFFFFULL));
  if (u(0, 1) == 1) {
    m.location = GeographicLocationContainer{
      static_cast<std::int32_t>(static_cast<std::int64_t>(u(0, 2ULL * kMaxLatitudeE7)) - kMaxLatitudeE7),
      static_cast<std::int32_t>(static_cast<std::int64_t>(u(0, 2ULL * kMaxLongitudeE7)) - kMaxLongitudeE7)};
  }
  if (u(0, 3) != 0) {
    AutomatedVehicleContainer av;
    const auto n = u(0, 12);
    std::uint32_t cursor = static_cast<std::uint32_t>(u(0, 1000));
    static constexpr std::uint8_t kMasks[] = {0x00, 0x03, 0x0C, 0x0F};
    for (std::uint64_t k = 0; k < n; ++k) {
      ZoneRecord z;
      z.start_m = cursor + static_cast<std::uint32_t>(u(0, 1)) * static_cast<std::uint32_t>(u(0, 500));
      z.end_m = z.start_m + static_cast<std::uint32_t>(u(1, 5000));
      cursor = z.end_m;
      z.allowed_sae_levels = *SaeLevelSet::from_bitmask(kMasks[u(0, 3)]);
      z.asd_class = static_cast<ReadinessClass>(u(0, 2));
      z.aud_class = static_cast<ReadinessClass>(u(0, 2));
      z.asd_score_cpct = static_cast<std::uint16_t>(u(0, kMaxScoreCpct));
      z.aud_score_cpct = static_cast<std::uint16_t>(u(0, kMaxScoreCpct));
      av.zones.push_back(z);
    }
    m.av = std::move(av);
  }
  return m;
}

}  // namespace hri::test

#endif  // HRI__TEST_SUPPORT_HPP_
