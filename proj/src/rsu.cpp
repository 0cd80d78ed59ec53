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

#include "hri/rsu.hpp"

#include "hri/error.hpp"

#include <boost/asio/io_context.hpp>
#include <boost/asio/ip/udp.hpp>
#include <boost/asio/signal_set.hpp>
#include <boost/asio/steady_timer.hpp>

#include <csignal>
#include <functional>
#include <memory>

namespace hri
{
namespace asio = boost::asio;

RsuEmitter::RsuEmitter(IvimMessage base) : base_(std::move(base)) { validate_ivim(base_); }

std::vector<std::uint8_t> RsuEmitter::stamp(IviStatus status, std::uint64_t timestamp_ms)
{
  IvimMessage m = base_;
  m.management.ivi_status = status;
  m.management.timestamp_ms = timestamp_ms;
  return encode(m);
}

std::vector<std::uint8_t> RsuEmitter::next(std::uint64_t timestamp_ms)
{
  const auto status = emitted_ == 0 ? IviStatus::New : IviStatus::Update;
  ++emitted_;
  return stamp(status, timestamp_ms);
}

std::vector<std::uint8_t> RsuEmitter::cancellation(std::uint64_t timestamp_ms)
{
  return stamp(IviStatus::Cancellation, timestamp_ms);
}

bool HexLineSink::send(std::span<const std::uint8_t> datagram)
{
  out_ << to_hex(datagram) << '\n';
  out_.flush();
  return static_cast<bool>(out_);
}

namespace
{

class UdpSink : public DatagramSink
{
public:
  UdpSink(asio::io_context & io, const RsuOptions & options, std::ostream & log)
  : socket_(io), log_(log)
  {
    boost::system::error_code ec;
    asio::ip::udp::resolver resolver(io);
    const auto targets = resolver.resolve(
      asio::ip::udp::v4(), options.target_host, std::to_string(options.target_port), ec);
    if (ec || targets.empty()) {
      throw Error(
        ErrorKind::Io, "cannot resolve target " + options.target_host + ":" +
                         std::to_string(options.target_port) + ": " + ec.message());
    }
    target_ = targets.begin()->endpoint();
    socket_.open(target_.protocol(), ec);
    if (ec) {
      throw Error(ErrorKind::Io, "cannot open UDP socket: " + ec.message());
    }
    socket_.set_option(asio::socket_base::broadcast(true), ec);
    if (options.bind_host) {
      const auto addr = asio::ip::make_address(*options.bind_host, ec);
      if (ec) {
        throw Error(ErrorKind::Io, "invalid bind address " + *options.bind_host + ": " + ec.message());
      }
      socket_.bind({addr, options.bind_port}, ec);
      if (ec) {
        throw Error(
          ErrorKind::Io, "cannot bind " + *options.bind_host + ":" + std::to_string(options.bind_port) +
                           ": " + ec.message());
      }
    }
  }

  bool send(std::span<const std::uint8_t> datagram) override
  {
    boost::system::error_code ec;
    socket_.send_to(asio::buffer(datagram.data(), datagram.size()), target_, 0, ec);
    if (ec) {
      log_ << "rsu: send failed: " << ec.message() << '\n';
      return false;
    }
    return true;
  }

private:
  asio::ip::udp::socket socket_;
  asio::ip::udp::endpoint target_;
  std::ostream & log_;
};

std::uint64_t wall_clock_ms()
{
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::system_clock::now().time_since_epoch())
                                      .count());
}

}  // namespace

void validate_rsu_options(const RsuOptions & options)
{
  if (options.period.count() <= 0) {
    throw Error(ErrorKind::Validation, "period must be positive");
  }
  if (options.count && *options.count == 0) {
    throw Error(ErrorKind::Validation, "count must be positive");
  }
  if (options.duration && options.duration->count() <= 0) {
    throw Error(ErrorKind::Validation, "duration must be positive");
  }
  if (!options.dry_run && options.target_port == 0) {
    throw Error(ErrorKind::Validation, "target port must be non-zero");
  }
}

std::size_t run_rsu(
  const IvimMessage & base, const RsuOptions & options, std::ostream & out, std::ostream & log)
{
  validate_rsu_options(options);
  asio::io_context io;
  std::unique_ptr<DatagramSink> sink;
  if (options.dry_run) {
    sink = std::make_unique<HexLineSink>(out);
  } else {
    sink = std::make_unique<UdpSink>(io, options, log);
  }

  RsuEmitter emitter(base);
  asio::signal_set signals(io, SIGINT, SIGTERM);
  asio::steady_timer timer(io);
  const auto start = std::chrono::steady_clock::now();
  const auto period_ms = static_cast<std::uint64_t>(options.period.count());
  std::size_t sent = 0;
  bool stopping = false;

  // Tick k is scheduled at start + k * period; timestamps follow the same
  // schedule when a start timestamp is fixed.
  const auto timestamp_for = [&](std::size_t k) {
    return options.start_timestamp_ms ? *options.start_timestamp_ms + k * period_ms : wall_clock_ms();
  };
  const auto deliver = [&](const std::vector<std::uint8_t> & datagram, IviStatus status, std::uint64_t ts) {
    const bool ok = sink->send(datagram);
    log << "rsu: " << (ok ? "sent" : "dropped") << ' ' << to_string(status) << " ts=" << ts
        << " bytes=" << datagram.size() << '\n';
    ++sent;
  };
  const auto finish = [&](std::size_t k) {
    if (stopping) {
      return;
    }
    stopping = true;
    timer.cancel();
    signals.cancel();
    const auto ts = timestamp_for(k);
    deliver(emitter.cancellation(ts), IviStatus::Cancellation, ts);
  };

  std::function<void()> tick = [&]() {
    const auto k = emitter.emitted();
    const auto scheduled = std::chrono::milliseconds(k * period_ms);
    if ((options.count && k >= *options.count) || (options.duration && scheduled >= *options.duration)) {
      finish(k);
      return;
    }
    const auto ts = timestamp_for(k);
    deliver(emitter.next(ts), k == 0 ? IviStatus::New : IviStatus::Update, ts);
    timer.expires_at(start + options.period * static_cast<long long>(k + 1));
    timer.async_wait([&](const boost::system::error_code & ec) {
      if (!ec && !stopping) {
        tick();
      }
    });
  };

  signals.async_wait([&](const boost::system::error_code & ec, int signo) {
    if (!ec) {
      log << "rsu: caught signal " << signo << ", cancelling\n";
      finish(emitter.emitted());
    }
  });
  tick();
  io.run();
  return sent;
}

}  // namespace hri
