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

#include "sitesim/traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace sitesim
{

std::string_view
to_string(DropCause cause)
{
    switch (cause)
    {
    case DropCause::None:
        return "none";
    case DropCause::QueueOverflow:
        return "queue_overflow";
    case DropCause::HarqExhausted:
        return "harq_exhausted";
    case DropCause::OutOfCoverage:
        return "out_of_coverage";
    }
    return "unknown";
}

void
VideoStream::validate() const
{
    if (!(rate_bps > 0.0))
    {
        throw std::invalid_argument("stream rate must be positive");
    }
    if (packet_size_bytes <= 0 || packet_size_bytes > 1500)
    {
        throw std::invalid_argument("packet size must be in (0, 1500] bytes");
    }
    if (stop_s < start_s)
    {
        throw std::invalid_argument("stream stop precedes start");
    }
}

std::vector<double>
cbr_emit_times(const VideoStream& stream)
{
    std::vector<double> times;
    CbrSource src(stream);
    while (auto t = src.peek())
    {
        times.push_back(*t);
        src.emit();
    }
    return times;
}

CbrSource::CbrSource(VideoStream stream)
    : m_stream(stream)
{
    m_stream.validate();
}

std::optional<double>
CbrSource::peek() const
{
    // Multiplying rather than accumulating keeps emission times drift-free.
    const double t = m_stream.start_s + static_cast<double>(m_next_seq) * m_stream.interval_s();
    if (t >= m_stream.stop_s)
    {
        return std::nullopt;
    }
    return t;
}

Packet
CbrSource::emit()
{
    Packet p;
    p.flow_id = m_stream.flow_id;
    p.seq = m_next_seq;
    p.size_bytes = m_stream.packet_size_bytes;
    p.t_created = *peek();
    ++m_next_seq;
    return p;
}

FlowQueue::FlowQueue(std::size_t capacity_pkts)
    : m_capacity(capacity_pkts)
{
    if (capacity_pkts == 0)
    {
        throw std::invalid_argument("queue capacity must be at least one packet");
    }
}

EnqueueResult
FlowQueue::enqueue(Packet& pkt)
{
    if (m_packets.size() >= m_capacity)
    {
        pkt.drop_cause = DropCause::QueueOverflow;
        return EnqueueResult::Dropped;
    }
    m_bytes += pkt.size_bytes;
    m_packets.push_back(pkt);
    return EnqueueResult::Accepted;
}

std::vector<Packet>
FlowQueue::serve(double budget_bytes)
{
    std::vector<Packet> done;
    while (budget_bytes > 0.0 && !m_packets.empty())
    {
        const double head_left = m_packets.front().size_bytes - m_head_sent;
        if (budget_bytes >= head_left)
        {
            budget_bytes -= head_left;
            m_bytes -= m_packets.front().size_bytes;
            m_head_sent = 0.0;
            done.push_back(m_packets.front());
            m_packets.pop_front();
        }
        else
        {
            m_head_sent += budget_bytes;
            budget_bytes = 0.0;
        }
    }
    if (m_packets.empty())
    {
        m_bytes = 0.0;
    }
    return done;
}

std::vector<Packet>
FlowQueue::flush()
{
    std::vector<Packet> out(m_packets.begin(), m_packets.end());
    m_packets.clear();
    m_bytes = 0.0;
    m_head_sent = 0.0;
    return out;
}

} // namespace sitesim
