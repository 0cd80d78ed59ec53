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

#include "hri/corridor.hpp"
#include "hri/error.hpp"
#include "hri/fileio.hpp"
#include "hri/ivim.hpp"
#include "hri/rsu.hpp"
#include "hri/scoring.hpp"
#include "hri/survey.hpp"
#include "hri/taxonomy.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

namespace fs = std::filesystem;
using hri::Error;
using hri::ErrorKind;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

int exit_code(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::Input:
      return kExitInput;
    case ErrorKind::Validation:
      return kExitValidation;
    case ErrorKind::Io:
      return kExitIo;
  }
  return kExitInput;
}

// Writes to a file atomically, or to stdout for an empty path or "-".
void emit(const std::string & path, const std::string & content)
{
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  hri::write_file_atomic(path, content);
}

std::uint64_t now_ms()
{
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::system_clock::now().time_since_epoch())
                                      .count());
}

hri::WeightTable select_weights(const std::string & selection)
{
  if (selection.empty() || selection == "builtin") {
    return hri::builtin_weight_table();
  }
  auto table = hri::load_weight_table(selection);
  const auto report = hri::validate_weight_table(table);
  if (!report.ok()) {
    throw Error(ErrorKind::Validation, selection + ": invalid weight table:\n" + report.to_string());
  }
  return table;
}

hri::Adequacy checked_level(int value, const char * flag)
{
  if (value < 0 || value > hri::kMaxAdequacy) {
    throw Error(ErrorKind::Validation, std::string(flag) + " must be 0, 1 or 2");
  }
  return static_cast<hri::Adequacy>(value);
}

std::int32_t degrees_to_e7(double degrees, double limit, const char * what)
{
  if (!std::isfinite(degrees) || std::fabs(degrees) > limit) {
    throw Error(ErrorKind::Validation, std::string(what) + " outside [-" + std::to_string(limit) + ", " +
                                         std::to_string(limit) + "] degrees");
  }
  return static_cast<std::int32_t>(std::llround(degrees * 1e7));
}

// Splits "host:port"; the port is mandatory.
std::pair<std::string, std::uint16_t> split_endpoint(const std::string & text, const char * flag)
{
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(ErrorKind::Input, std::string(flag) + " expects host:port, got '" + text + "'");
  }
  const auto port_text = text.substr(colon + 1);
  std::size_t used = 0;
  unsigned long port = 0;
  try {
    port = std::stoul(port_text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != port_text.size() || port > 65535) {
    throw Error(ErrorKind::Input, std::string(flag) + ": invalid port '" + port_text + "'");
  }
  return {text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

struct ScoreArgs
{
  std::string corridor;
  std::vector<std::string> overlays;
  std::string weights;
  double threshold = hri::kHighlyLikelyLowerBound;
  bool exclusive = false;
  double segment_length = hri::kDefaultSegmentLengthM;
  std::string csv_out;
  std::string json_out;
  bool pretty = false;
  bool reference = false;
};

int cmd_score(const ScoreArgs & a)
{
  const auto weights = select_weights(a.weights);
  auto profile = hri::load_corridor(a.corridor, a.segment_length);
  for (const auto & path : a.overlays) {
    profile = hri::apply_overlay(profile, hri::load_overlay(path));
  }
  const hri::ThresholdPolicy policy{a.threshold, !a.exclusive};
  const auto scored = a.reference ? hri::score_corridor_reference(profile, weights, policy)
                                  : hri::score_corridor(profile, weights, policy);
  const auto csv = hri::format_profile_csv(scored);
  const auto json = hri::format_profile_json(scored);
  if (!a.csv_out.empty()) {
    emit(a.csv_out, csv);
  }
  if (!a.json_out.empty()) {
    emit(a.json_out, json);
  }
  if (a.pretty) {
    std::cout << hri::format_profile_pretty(scored);
  } else if (a.csv_out.empty() && a.json_out.empty()) {
    std::cout << csv;
  }
  return kExitOk;
}

struct SurveyArgs
{
  std::string ratings;
  std::string respondents;
  std::string out_dir;
  bool pretty = false;
};

int cmd_survey(const SurveyArgs & a)
{
  const auto responses = hri::load_survey(a.ratings, a.respondents);
  const auto table = hri::aggregate_mean_impact(responses);
  const auto weights_csv = hri::format_weight_table_csv(table);
  const auto diff_csv = hri::format_impact_difference_csv(hri::impact_difference(table));
  const auto means_csv = hri::format_grouped_mean_csv(hri::grouped_mean(responses));
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) {
    throw Error(ErrorKind::Io, "cannot create " + a.out_dir + ": " + ec.message());
  }
  const fs::path dir(a.out_dir);
  hri::write_file_atomic(dir / "weights.csv", weights_csv);
  hri::write_file_atomic(dir / "impact_difference.csv", diff_csv);
  hri::write_file_atomic(dir / "grouped_means.csv", means_csv);
  if (a.pretty) {
    std::cout << "respondents: " << responses.size() << "\n";
    std::printf("%-30s %6s %6s %6s\n", "attribute", "AsD", "AuD", "diff");
    for (const auto & attr : hri::builtin_attribute_registry()) {
      const double asd = table.at(hri::AutomationLevelGroup::AsD, attr.id);
      const double aud = table.at(hri::AutomationLevelGroup::AuD, attr.id);
      std::printf("%-30s %6.2f %6.2f %+6.2f\n", std::string(attr.key).c_str(), asd, aud, aud - asd);
    }
    std::fflush(stdout);
  }
  return kExitOk;
}

struct SensitivityArgs
{
  std::string macro_weights;
  std::optional<int> degraded;
  std::optional<int> degraded_markings;
  std::optional<int> degraded_maintenance;
  std::optional<int> degraded_design;
  std::string out;
  std::string format = "csv";
  bool pretty = false;
};

int cmd_sensitivity(const SensitivityArgs & a)
{
  const auto macro = a.macro_weights.empty()
                       ? hri::macro_weight_table()
                       : hri::parse_macro_weight_csv(hri::read_text_file(a.macro_weights), a.macro_weights);
  std::array<hri::Adequacy, 3> levels{1, 1, 1};
  if (a.degraded) {
    levels.fill(checked_level(*a.degraded, "--degraded"));
  }
  if (a.degraded_markings) {
    levels[0] = checked_level(*a.degraded_markings, "--degraded-markings");
  }
  if (a.degraded_maintenance) {
    levels[1] = checked_level(*a.degraded_maintenance, "--degraded-maintenance");
  }
  if (a.degraded_design) {
    levels[2] = checked_level(*a.degraded_design, "--degraded-design");
  }
  const auto rows = hri::run_sensitivity(macro, levels);
  const auto body =
    a.format == "json" ? hri::format_sensitivity_json(rows) : hri::format_sensitivity_csv(rows);
  if (a.pretty) {
    if (!a.out.empty() && a.out != "-") {
      emit(a.out, body);
    }
    std::cout << hri::format_sensitivity_pretty(rows);
  } else {
    emit(a.out, body);
  }
  return kExitOk;
}

struct IvimBuildArgs
{
  std::string profile;
  std::uint32_t station_id = 1;
  std::uint16_t ivi_id = 1;
  std::optional<std::uint64_t> timestamp;
  std::uint32_t validity = 3600;
  std::optional<double> lat;
  std::optional<double> lon;
  std::string out;
};

hri::BuildOptions build_options(const IvimBuildArgs & a)
{
  hri::BuildOptions opt;
  opt.station_id = a.station_id;
  opt.ivi_identification = a.ivi_id;
  opt.timestamp_ms = a.timestamp.value_or(now_ms());
  opt.validity_duration_s = a.validity;
  if (a.lat.has_value() != a.lon.has_value()) {
    throw Error(ErrorKind::Input, "--lat and --lon must be given together");
  }
  if (a.lat) {
    opt.location = hri::GeographicLocationContainer{
      degrees_to_e7(*a.lat, 90.0, "latitude"), degrees_to_e7(*a.lon, 180.0, "longitude")};
  }
  return opt;
}

int cmd_ivim_build(const IvimBuildArgs & a)
{
  const auto scored = hri::load_profile(a.profile);
  emit(a.out, hri::to_canonical_text(hri::build_ivim(scored, build_options(a))));
  return kExitOk;
}

struct IvimIoArgs
{
  std::string in;
  std::string out;
};

int cmd_ivim_encode(const IvimIoArgs & a)
{
  const auto msg = hri::from_canonical_text(hri::read_text_file(a.in), a.in);
  hri::write_file_atomic(a.out, hri::encode(msg));
  return kExitOk;
}

hri::IvimMessage decode_file(const std::string & path)
{
  const auto bytes = hri::read_binary_file(path);
  try {
    return hri::decode(bytes);
  } catch (const hri::DecodeError & e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

int cmd_ivim_decode(const IvimIoArgs & a)
{
  emit(a.out, hri::to_canonical_text(decode_file(a.in)));
  return kExitOk;
}

int cmd_ivim_inspect(const IvimIoArgs & a)
{
  std::cout << hri::inspect_summary(decode_file(a.in));
  return kExitOk;
}

struct RsuArgs
{
  std::string message;
  std::string text;
  IvimBuildArgs build;
  std::optional<std::uint32_t> station_id;
  std::string target = "127.0.0.1:47000";
  std::string bind;
  double period_s = 1.0;
  std::optional<std::size_t> count;
  std::optional<double> duration_s;
  bool dry_run = false;
};

int cmd_simulate_rsu(RsuArgs a)
{
  const int sources = !a.message.empty() + !a.text.empty() + !a.build.profile.empty();
  if (sources != 1) {
    throw Error(ErrorKind::Input, "give exactly one of --message, --text or --profile");
  }
  if (!(a.period_s > 0.0) || !std::isfinite(a.period_s)) {
    throw Error(ErrorKind::Validation, "--period must be positive");
  }
  if (a.duration_s && !(*a.duration_s > 0.0)) {
    throw Error(ErrorKind::Validation, "--duration must be positive");
  }
  hri::IvimMessage base;
  if (!a.message.empty()) {
    base = decode_file(a.message);
  } else if (!a.text.empty()) {
    base = hri::from_canonical_text(hri::read_text_file(a.text), a.text);
  } else {
    if (a.station_id) {
      a.build.station_id = *a.station_id;
    }
    base = hri::build_ivim(hri::load_profile(a.build.profile), build_options(a.build));
  }
  if (a.station_id) {
    base.header.station_id = *a.station_id;
  }
  hri::RsuOptions opt;
  opt.period = std::chrono::milliseconds(std::llround(a.period_s * 1000.0));
  opt.count = a.count;
  if (a.duration_s) {
    opt.duration = std::chrono::milliseconds(std::llround(*a.duration_s * 1000.0));
  }
  opt.start_timestamp_ms = a.build.timestamp;
  opt.dry_run = a.dry_run;
  std::tie(opt.target_host, opt.target_port) = split_endpoint(a.target, "--target");
  if (!a.bind.empty()) {
    const auto [host, port] = split_endpoint(a.bind, "--bind");
    opt.bind_host = host;
    opt.bind_port = port;
  }
  hri::run_rsu(base, opt, std::cout, std::cerr);
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Highway readiness index toolkit: scoring, survey aggregation, IVIM messages"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hri 0.1.0");

  ScoreArgs score;
  auto * sc = app.add_subcommand("score", "Score a corridor and write readiness profiles");
  sc->add_option("--corridor", score.corridor, "Corridor CSV")->required();
  sc->add_option("--overlay", score.overlays, "Scenario overlay JSON, applied in order (repeatable)");
  sc->add_option("--weights", score.weights, "'builtin' or a weight-table CSV path")
    ->envname("HRI_WEIGHTS");
  sc->add_option("--threshold", score.threshold, "Recommendation threshold in percent")
    ->capture_default_str();
  sc->add_flag("--threshold-exclusive", score.exclusive, "Require scores strictly above the threshold");
  sc->add_option("--segment-length", score.segment_length, "Segment length in m when the corridor has no metadata")
    ->capture_default_str();
  sc->add_option("--csv", score.csv_out, "Profile CSV output path ('-' for stdout)");
  sc->add_option("--json", score.json_out, "Profile JSON output path ('-' for stdout)");
  sc->add_flag("--pretty", score.pretty, "Print a human-readable table");
  sc->add_flag("--reference", score.reference, "Use the serial reference scorer");

  SurveyArgs survey;
  auto * sv = app.add_subcommand("survey", "Aggregate expert survey responses into weights");
  sv->add_option("--ratings", survey.ratings, "Ratings CSV")->required();
  sv->add_option("--respondents", survey.respondents, "Respondents CSV")->required();
  sv->add_option("--out-dir", survey.out_dir, "Directory for weights.csv, impact_difference.csv, grouped_means.csv")
    ->required();
  sv->add_flag("--pretty", survey.pretty, "Print a human-readable summary");

  SensitivityArgs sens;
  auto * se = app.add_subcommand("sensitivity", "Macro-category sensitivity analysis");
  se->add_option("--macro-weights", sens.macro_weights, "Macro weight CSV (default: built-in)");
  se->add_option("--degraded", sens.degraded, "Adequacy of every degraded physical category");
  se->add_option("--degraded-markings", sens.degraded_markings, "Adequacy of degraded markings and signage");
  se->add_option("--degraded-maintenance", sens.degraded_maintenance, "Adequacy of degraded maintenance");
  se->add_option("--degraded-design", sens.degraded_design, "Adequacy of degraded design and safety");
  se->add_option("--out", sens.out, "Report path (default stdout)");
  se->add_option("--format", sens.format, "csv or json")
    ->check(CLI::IsMember({"csv", "json"}))
    ->capture_default_str();
  se->add_flag("--pretty", sens.pretty, "Print a human-readable table");

  auto * iv = app.add_subcommand("ivim", "Build, encode, decode and inspect IVIM messages");
  iv->require_subcommand(1);
  const auto add_build_flags = [](CLI::App * cmd, IvimBuildArgs & b) {
    cmd->add_option("--station-id", b.station_id, "Roadside unit station id")->capture_default_str();
    cmd->add_option("--ivi-id", b.ivi_id, "IVI identification number")->capture_default_str();
    cmd->add_option("--timestamp", b.timestamp, "Management timestamp in ms since epoch (default: now)");
    cmd->add_option("--validity", b.validity, "Validity duration in s")->capture_default_str();
    cmd->add_option("--lat", b.lat, "Reference latitude in degrees");
    cmd->add_option("--lon", b.lon, "Reference longitude in degrees");
  };
  IvimBuildArgs build;
  auto * ib = iv->add_subcommand("build", "Score profile to canonical message text");
  ib->add_option("--profile", build.profile, "Score profile (.json or .csv)")->required();
  add_build_flags(ib, build);
  ib->add_option("--out", build.out, "Output text path (default stdout)");
  IvimIoArgs enc;
  auto * ie = iv->add_subcommand("encode", "Canonical text to binary");
  ie->add_option("--in", enc.in, "Message text")->required();
  ie->add_option("--out", enc.out, "Binary output path")->required();
  IvimIoArgs dec;
  auto * id = iv->add_subcommand("decode", "Binary to canonical text");
  id->add_option("--in", dec.in, "Binary message")->required();
  id->add_option("--out", dec.out, "Output text path (default stdout)");
  IvimIoArgs ins;
  auto * ii = iv->add_subcommand("inspect", "Human-readable summary of a binary message");
  ii->add_option("--in", ins.in, "Binary message")->required();

  RsuArgs rsu;
  auto * rs = app.add_subcommand("simulate-rsu", "Periodically broadcast an IVIM over UDP");
  rs->add_option("--message", rsu.message, "Binary message to broadcast");
  rs->add_option("--text", rsu.text, "Canonical message text to broadcast");
  rs->add_option("--profile", rsu.build.profile, "Score profile to build the message from");
  rs->add_option("--station-id", rsu.station_id, "Override the station id");
  rs->add_option("--ivi-id", rsu.build.ivi_id, "IVI identification when building from a profile");
  rs->add_option("--validity", rsu.build.validity, "Validity in s when building from a profile");
  rs->add_option("--lat", rsu.build.lat, "Reference latitude when building from a profile");
  rs->add_option("--lon", rsu.build.lon, "Reference longitude when building from a profile");
  rs->add_option("--timestamp", rsu.build.timestamp, "Fixed timestamp of the first emission in ms");
  rs->add_option("--target", rsu.target, "UDP target host:port")->capture_default_str();
  rs->add_option("--bind", rsu.bind, "Local bind address:port");
  rs->add_option("--period", rsu.period_s, "Emission period in s")->capture_default_str();
  rs->add_option("--count", rsu.count, "Stop after this many periodic emissions");
  rs->add_option("--duration", rsu.duration_s, "Stop after this many seconds");
  rs->add_flag("--dry-run", rsu.dry_run, "Print hex lines instead of sending UDP datagrams");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (sc->parsed()) {
      return cmd_score(score);
    }
    if (sv->parsed()) {
      return cmd_survey(survey);
    }
    if (se->parsed()) {
      return cmd_sensitivity(sens);
    }
    if (ib->parsed()) {
      return cmd_ivim_build(build);
    }
    if (ie->parsed()) {
      return cmd_ivim_encode(enc);
    }
    if (id->parsed()) {
      return cmd_ivim_decode(dec);
    }
    if (ii->parsed()) {
      return cmd_ivim_inspect(ins);
    }
    if (rs->parsed()) {
      return cmd_simulate_rsu(rsu);
    }
  } catch (const Error & e) {
    std::cerr << "hri: error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception & e) {
    std::cerr << "hri: error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
