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

// Acceptance runner. Prints one PASS/FAIL line per criterion; with
// --criterion N only that one runs and the exit code reflects it.

#include "hri/error.hpp"
#include "hri/ivim.hpp"
#include "hri/rsu.hpp"
#include "hri/scoring.hpp"
#include "hri/survey.hpp"
#include "test_support.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace
{

using namespace hri;
using G = AutomationLevelGroup;
using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string & what)
  {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SegmentObservation filled(Adequacy v)
{
  SegmentObservation s;
  s.values.fill(v);
  return s;
}

Outcome criterion1()
{
  Outcome o;
  const auto t0 = Clock::now();
  auto g = test::rng(100);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto w = trial == 0 ? builtin_weight_table() : test::random_weight_table(g);
    for (const auto grp : kAllGroups) {
      for (const Adequacy v : {0, 1, 2}) {
        const double got = score_segment(filled(v), w, grp).value;
        if (std::fabs(got - 50.0 * v) > 1e-9) {
          o.check(false, "v=" + std::to_string(v) + " scored " + std::to_string(got));
          return o;
        }
      }
    }
  }
  o.check(seconds_since(t0) < 1.0, "runtime above 1 s");
  return o;
}

Outcome criterion2()
{
  Outcome o;
  const std::string cmd = std::string("python3 ") + HRI_SOURCE_DIR + "/tests/oracles/weight_sums.py " +
                          test::data_path("weights/builtin_survey.csv").string();
  FILE * pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  if (pipe != nullptr) {
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe) != nullptr) {
      out += buf;
    }
    o.check(::pclose(pipe) == 0, "oracle script exited non-zero");
  } else {
    o.check(false, "cannot run oracle script");
  }
  o.check(out.find("sum_asd=19.25 sum_aud=24.0") != std::string::npos, "oracle sums differ: " + out);
  auto s = filled(2);
  s.values[index_of(AttributeId::HdMaps)] = 0;
  const double v = score_segment(s, builtin_weight_table(), G::AuD).value;
  o.check(std::fabs(v - 100.0 * 22.4 / 24.0) < 1e-6, "hd-maps case scored " + std::to_string(v));
  return o;
}

Outcome criterion3()
{
  Outcome o;
  const std::pair<double, ReadinessClass> cases[] = {
    {0.0, ReadinessClass::Unlikely},   {32.99, ReadinessClass::Unlikely},    {33.0, ReadinessClass::MayBe},
    {65.99, ReadinessClass::MayBe},    {66.0, ReadinessClass::HighlyLikely}, {100.0, ReadinessClass::HighlyLikely}};
  for (const auto & [value, want] : cases) {
    o.check(classify(value) == want, "classify(" + std::to_string(value) + ")");
  }
  return o;
}

Outcome criterion4()
{
  Outcome o;
  const auto t0 = Clock::now();
  const auto & m = macro_weight_table();
  const auto c = macro_sensitivity({SensitivityScenario::CompliantNoHd}, m);
  const auto with = macro_sensitivity({SensitivityScenario::DegradedWithHd}, m);
  const auto without = macro_sensitivity({SensitivityScenario::DegradedNoHd}, m);
  o.check(c[index_of(G::AuD)] == 66.0, "compliant-no-hd AuD = " + std::to_string(c[index_of(G::AuD)]));
  o.check(classify(c[index_of(G::AuD)]) == ReadinessClass::HighlyLikely, "66.0 not highly likely");
  for (const auto g : kAllGroups) {
    o.check(with[index_of(g)] > without[index_of(g)], "HD maps do not help " + std::string(to_string(g)));
  }
  const double gap_aud = with[index_of(G::AuD)] - without[index_of(G::AuD)];
  const double gap_asd = with[index_of(G::AsD)] - without[index_of(G::AsD)];
  o.check(gap_aud > gap_asd, "HD-map gain not larger for AuD");
  o.check(seconds_since(t0) < 1.0, "runtime above 1 s");
  return o;
}

Outcome criterion5()
{
  Outcome o;
  const auto t0 = Clock::now();
  const auto base_profile = load_corridor(test::data_path("d08/baseline.csv"));
  const auto rw_overlay = load_overlay(test::data_path("d08/overlays/roadworks_km11_17.json"));
  const auto mt_overlay = load_overlay(test::data_path("d08/overlays/maintenance_km3_16.json"));
  const auto base = score_corridor(base_profile, builtin_weight_table());
  const auto rw = score_corridor(apply_overlay(base_profile, rw_overlay), builtin_weight_table());
  const auto mt = score_corridor(apply_overlay(base_profile, mt_overlay), builtin_weight_table());
  o.check(base.segments.size() == 240, "fixture is not 240 segments");

  for (const auto & s : base.segments) {
    for (const auto g : kAllGroups) {
      o.check(s.score(g) >= 66.0 && s.score(g) <= 100.0, "baseline out of band at " + std::to_string(s.segment_index));
    }
    o.check(s.allowed_sae_levels == SaeLevelSet::all(), "baseline levels at " + std::to_string(s.segment_index));
  }

  const auto inside = [](const SegmentAssessment & s, const ScenarioOverlay & ov) {
    return s.start_m < ov.to_km * 1000.0 && s.end_m() > ov.from_km * 1000.0;
  };
  std::size_t overlaid = 0;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < base.segments.size(); ++i) {
    const auto & s = rw.segments[i];
    if (inside(s, rw_overlay)) {
      ++overlaid;
      dropped += s.score(G::AuD) < 66.0;
      o.check(s.allowed_sae_levels.empty(), "roadworks levels not empty at " + std::to_string(i));
    } else {
      o.check(s == base.segments[i], "roadworks changed segment " + std::to_string(i));
    }
    const auto & t = mt.segments[i];
    if (inside(t, mt_overlay)) {
      o.check(t.allowed_sae_levels.empty(), "maintenance levels not empty at " + std::to_string(i));
    } else {
      o.check(t == base.segments[i], "maintenance changed segment " + std::to_string(i));
    }
  }
  o.check(overlaid > 0 && dropped * 5 >= overlaid * 4,
    "roadworks AuD drops " + std::to_string(dropped) + "/" + std::to_string(overlaid));
  o.check(seconds_since(t0) < 5.0, "runtime above 5 s");
  return o;
}

std::vector<double> random_weights(std::mt19937_64 & g, std::size_t n)
{
  std::vector<double> w(n);
  for (auto & x : w) {
    x = std::uniform_int_distribution<int>(0, 40)(g) * 0.05;
  }
  w[std::uniform_int_distribution<std::size_t>(0, n - 1)(g)] += 1.0;
  return w;
}

Outcome criterion6()
{
  Outcome o;
  auto g = test::rng(101);
  constexpr int kCases = 1000;
  for (int trial = 0; trial < kCases && o.pass; ++trial) {
    const auto w = random_weights(g, kAttributeCount);
    std::vector<Adequacy> v(kAttributeCount);
    for (auto & x : v) {
      x = test::random_adequacy(g);
    }
    const double s = readiness_percentage(w, v);
    o.check(s >= 0.0 && s <= 100.0, "unbounded score");

    const auto i = std::uniform_int_distribution<std::size_t>(0, kAttributeCount - 1)(g);
    auto up = v;
    up[i] = static_cast<Adequacy>(std::min<int>(up[i] + 1, kMaxAdequacy));
    o.check(readiness_percentage(w, up) >= s, "monotonicity");

    for (const double c : {0.1, 3.0, 17.0}) {
      auto scaled = w;
      for (auto & x : scaled) {
        x *= c;
      }
      o.check(std::fabs(readiness_percentage(scaled, v) - s) <= 1e-9, "scaling invariance");
    }

    const auto w4 = random_weights(g, 4);
    for (int code = 0; code < 81; ++code) {
      std::vector<int> vi(4);
      std::vector<Adequacy> va(4);
      for (int k = 0, c = code; k < 4; ++k, c /= 3) {
        vi[static_cast<std::size_t>(k)] = c % 3;
        va[static_cast<std::size_t>(k)] = static_cast<Adequacy>(c % 3);
      }
      o.check(std::fabs(readiness_percentage(w4, va) - test::oracle_readiness(w4, vi)) <= 1e-9, "brute force");
    }
  }
  return o;
}

std::vector<SurveyResponse> panel(const std::string & name)
{
  return load_survey(
    test::data_path("survey/" + name + "_ratings.csv"), test::data_path("survey/" + name + "_respondents.csv"));
}

Outcome criterion7()
{
  Outcome o;
  const auto p17 = panel("panel17");
  o.check(p17.size() == 17, "panel17 has " + std::to_string(p17.size()) + " respondents");
  const auto t = aggregate_mean_impact(p17);
  std::size_t mismatched = 0;
  std::string names;
  for (const auto g : kAllGroups) {
    for (const auto & a : builtin_attribute_registry()) {
      if (t.at(g, a.id) != builtin_weight_table().at(g, a.id)) {
        ++mismatched;
        names += " " + std::string(to_string(g)) + "/" + std::string(a.key);
      }
    }
  }
  o.check(
    mismatched == 0, "17-respondent means miss " + std::to_string(mismatched) +
                       " weights (denominator-20 values unreachable):" + names);

  const auto d = impact_difference(builtin_weight_table());
  o.check(std::fabs(d[index_of(AttributeId::HdMaps)] - 0.7) < 1e-12, "hd-maps difference");
  o.check(std::fabs(d[index_of(AttributeId::HorizontalCurvature)] + 0.15) < 1e-12, "horizontal-curvature difference");

  const auto days = grouped_mean(p17);
  o.check(days.at({Region::Europe, DayService::Day3}) == 1.7, "Europe/Day3");
  o.check(std::fabs(days.at({Region::Usa, DayService::Day3}) - 0.33) < 0.005, "USA/Day3");
  return o;
}

Outcome criterion8()
{
  Outcome o;
  const auto t0 = Clock::now();
  auto g = test::rng(102);
  for (int trial = 0; trial < 10000 && o.pass; ++trial) {
    const auto m = test::random_valid_message(g);
    const auto b = encode(m);
    o.check(decode(b) == m, "round trip " + to_hex(b));
  }

  IvimMessage minimal;
  minimal.header.station_id = 1;
  minimal.management.ivi_identification = 1;
  minimal.management.validity_duration_s = 1;
  const std::vector<std::uint8_t> golden{'I', 'V', 'I', 'M', 2, 6, 0, 0, 0, 1, 0, 0, 1,
                                         0,   0,   0,   0,   0, 0, 0, 0, 0, 0, 0, 1, 0};
  o.check(encode(minimal) == golden, "golden bytes");

  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 10000 && o.pass; ++trial) {
    const auto m = test::random_valid_message(g);
    const auto b = encode(m);
    std::vector<std::size_t> structural{0, 1, 2, 3, 5, 10};
    if (m.av) {
      structural.push_back(kIvimFixedSize + (m.location ? 8 : 0));
    }
    for (const auto p : structural) {
      auto x = b;
      x[p] = static_cast<std::uint8_t>(byte(g));
      try {
        o.check(decode(x) == m && x == b, "silent misparse at byte " + std::to_string(p));
      } catch (const DecodeError &) {
      }
    }
  }

  for (const std::string overlay : {"", "identity.json", "roadworks_km11_17.json", "maintenance_km3_16.json"}) {
    auto p = load_corridor(test::data_path("d08/baseline.csv"));
    if (!overlay.empty()) {
      p = apply_overlay(p, load_overlay(test::data_path("d08/overlays/" + overlay)));
    }
    const auto scored = score_corridor(p, builtin_weight_table());
    const auto zones = build_ivim(scored, {}).av->zones;
    bool tiled = !zones.empty() && zones.front().start_m == 0 &&
                 zones.back().end_m == static_cast<std::uint32_t>(std::llround(scored.length_m()));
    for (std::size_t k = 1; k < zones.size(); ++k) {
      tiled = tiled && zones[k].start_m == zones[k - 1].end_m;
    }
    o.check(tiled, "zone tiling on " + (overlay.empty() ? std::string("baseline") : overlay));
  }
  o.check(seconds_since(t0) < 10.0, "runtime above 10 s");
  return o;
}

Outcome criterion9()
{
  Outcome o;
  auto g = test::rng(103);
  auto base = test::random_valid_message(g);
  base.management.ivi_status = IviStatus::New;
  base.management.validity_duration_s = 3600;
  RsuOptions opt;
  opt.period = std::chrono::milliseconds(1000);
  opt.count = 3;
  opt.dry_run = true;
  std::ostringstream out;
  std::ostringstream log;
  run_rsu(base, opt, out, log);

  std::vector<IvimMessage> msgs;
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i + 1 < line.size(); i += 2) {
      bytes.push_back(static_cast<std::uint8_t>(std::stoi(line.substr(i, 2), nullptr, 16)));
    }
    try {
      msgs.push_back(decode(bytes));
    } catch (const DecodeError & e) {
      o.check(false, std::string("undecodable emission: ") + e.what());
    }
  }
  o.check(msgs.size() == 4, std::to_string(msgs.size()) + " messages instead of 3 plus cancellation");
  if (msgs.size() != 4) {
    return o;
  }
  const IviStatus want[] = {IviStatus::New, IviStatus::Update, IviStatus::Update, IviStatus::Cancellation};
  for (std::size_t k = 0; k < 4; ++k) {
    o.check(msgs[k].management.ivi_status == want[k], "status of message " + std::to_string(k));
  }
  for (std::size_t k = 1; k < 3; ++k) {
    auto n = msgs[k];
    n.management.timestamp_ms = base.management.timestamp_ms;
    n.management.ivi_status = base.management.ivi_status;
    o.check(n == base, "message " + std::to_string(k) + " differs beyond timestamp and status");
  }
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> & criteria()
{
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
    {"readiness extremes 0/50/100", criterion1},
    {"weight-sum oracle and hd-maps case", criterion2},
    {"classification bands", criterion3},
    {"macro sensitivity", criterion4},
    {"corridor case-study shape", criterion5},
    {"scoring property suite", criterion6},
    {"survey aggregation", criterion7},
    {"IVIM codec", criterion8},
    {"RSU simulator dry run", criterion9},
  };
  return all;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Acceptance criteria runner"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) {
      continue;
    }
    Outcome o;
    try {
      o = criteria()[i].second();
    } catch (const std::exception & e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << criteria()[i].first << ")";
    for (const auto & n : o.notes) {
      std::cout << "; " << n;
    }
    std::cout << '\n';
  }
  return all_pass ? 0 : 1;
}
