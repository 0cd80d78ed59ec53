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

#ifndef HRI__RSU_HPP_
#define HRI__RSU_HPP_

#include "hri/ivim.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hri
{

/// Produces the datagram sequence of a broadcasting roadside unit: the first
/// emission carries ivi_status new, later ones update, and the closing one
/// cancellation. Every emission carries the caller-supplied timestamp.
class RsuEmitter
{
public:
  explicit RsuEmitter(IvimMessage base);

  std::vector<std::uint8_t> next(std::uint64_t timestamp_ms);
  std::vector<std::uint8_t> cancellation(std::uint64_t timestamp_ms);

  std::size_t emitted() const { return emitted_; }

private:
  std::vector<std::uint8_t> stamp(IviStatus status, std::uint64_t timestamp_ms);

  IvimMessage base_;
  std::size_t emitted_ = 0;
};

/// Destination for encoded datagrams.
class DatagramSink
{
public:
  virtual ~DatagramSink() = default;
  /// Returns false on a transient send failure; the caller logs and continues.
  virtual bool send(std::span<const std::uint8_t> datagram) = 0;
};

/// Dry-run sink writing one lowercase hex line per datagram.
class HexLineSink : public DatagramSink
{
public:
  explicit HexLineSink(std::ostream & out) : out_(out) {}
  bool send(std::span<const std::uint8_t> datagram) override;

private:
  std::ostream & out_;
};

struct RsuOptions
{
  std::chrono::milliseconds period{1000};
  /// Stop after this many periodic emissions.
  std::optional<std::size_t> count;
  /// Stop after this much run time.
  std::optional<std::chrono::milliseconds> duration;
  /// Fixed timestamp of the first emission; emission k carries start + k * period.
  std::optional<std::uint64_t> start_timestamp_ms;
  bool dry_run = false;
  std::string target_host = "127.0.0.1";
  std::uint16_t target_port = 47000;
  std::optional<std::string> bind_host;
  std::uint16_t bind_port = 0;
};

/// Throws Error(Validation) for a non-positive period or zero count/duration.
void validate_rsu_options(const RsuOptions & options);

/// Runs the timer-driven broadcast loop until count/duration is reached or
/// SIGINT/SIGTERM arrives, then sends a cancellation. Dry-run writes hex lines
/// to `out`; otherwise datagrams go to the UDP target. Progress is logged to
/// `log`. Returns the number of datagrams handed to the sink, cancellation
/// included. Throws Error(Io) when the socket cannot be opened or bound.
std::size_t run_rsu(
  const IvimMessage & base, const RsuOptions & options, std::ostream & out, std::ostream & log);

}  // namespace hri

#endif  // HRI__RSU_HPP_
