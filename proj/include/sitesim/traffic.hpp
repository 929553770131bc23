// SPDX-License-Identifier: Apache-2.0
//
// sitesim - LTE / 5G mmWave uplink video simulator for construction sites
// Copyright (C) 2026 The sitesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SITESIM_TRAFFIC_HPP
#define SITESIM_TRAFFIC_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

namespace sitesim
{

enum class DropCause : std::uint8_t
{
    None,
    QueueOverflow,
    HarqExhausted,
    OutOfCoverage,
};

std::string_view to_string(DropCause cause);

/// One constant-bitrate UDP video flow from a camera UE.
struct VideoStream
{
    int flow_id = 0;
    double rate_bps = 0.0;
    int packet_size_bytes = 1250;
    double start_s = 0.0;
    double stop_s = 0.0;

    /// Throws std::invalid_argument; start == stop is accepted (empty stream).
    void validate() const;
    double interval_s() const { return packet_size_bytes * 8.0 / rate_bps; }
};

struct Packet
{
    int flow_id = 0;
    std::int64_t seq = 0;
    int size_bytes = 0;
    double t_created = 0.0;
    std::optional<double> t_delivered;
    int attempts = 0;
    DropCause drop_cause = DropCause::None;
    bool counted = true; // created inside the measurement window
};

/// Creation times of every packet of a stream: start, start + dt, ... < stop.
std::vector<double> cbr_emit_times(const VideoStream& stream);

/// Lazy form of cbr_emit_times used by the simulator.
class CbrSource
{
  public:
    explicit CbrSource(VideoStream stream);

    /// Time of the next packet, or nullopt once the stream has stopped.
    std::optional<double> peek() const;
    /// Emits the packet at peek(); the caller must check peek() first.
    Packet emit();

    const VideoStream& stream() const { return m_stream; }
    std::int64_t emitted() const { return m_next_seq; }

  private:
    VideoStream m_stream;
    std::int64_t m_next_seq = 0;
};

enum class EnqueueResult : std::uint8_t
{
    Accepted,
    Dropped,
};

/// Drop-tail UE transmit buffer. The head packet may be partly transmitted
/// (segmented over several transport blocks).
class FlowQueue
{
  public:
    explicit FlowQueue(std::size_t capacity_pkts);

    /// Rejects (and marks the packet QueueOverflow) iff size() >= capacity.
    EnqueueResult enqueue(Packet& pkt);

    /// Transmits up to budget bytes from the head; returns packets whose last
    /// byte went out, in order.
    std::vector<Packet> serve(double budget_bytes);

    /// Removes everything (e.g. coverage loss) and returns the packets.
    std::vector<Packet> flush();

    bool empty() const { return m_packets.empty(); }
    std::size_t size() const { return m_packets.size(); }
    std::size_t capacity() const { return m_capacity; }
    double backlog_bytes() const { return m_bytes - m_head_sent; }

  private:
    std::deque<Packet> m_packets;
    std::size_t m_capacity;
    double m_bytes = 0.0;
    double m_head_sent = 0.0;
};

} // namespace sitesim

#endif // SITESIM_TRAFFIC_HPP
