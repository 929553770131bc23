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

#include "sitesim/engine.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sitesim
{

std::string_view
to_string(EventKind kind)
{
    switch (kind)
    {
    case EventKind::StreamStart:
        return "stream_start";
    case EventKind::StreamStop:
        return "stream_stop";
    case EventKind::PacketArrival:
        return "packet_arrival";
    case EventKind::SlotBoundary:
        return "slot_boundary";
    case EventKind::BeamRefresh:
        return "beam_refresh";
    case EventKind::Delivery:
        return "delivery";
    case EventKind::HarqDrop:
        return "harq_drop";
    case EventKind::SimulationEnd:
        return "simulation_end";
    case EventKind::Generic:
        return "generic";
    }
    return "unknown";
}

EventId
Engine::schedule(double time, EventKind kind, std::function<void()> action, EventDetail detail)
{
    if (!std::isfinite(time))
    {
        throw std::invalid_argument("cannot schedule an event at a non-finite time");
    }
    if (time < m_now)
    {
        throw std::invalid_argument("cannot schedule an event at t=" + std::to_string(time) +
                                    " before the current clock t=" + std::to_string(m_now));
    }
    const EventId id = m_next_sequence++;
    m_queue.push(SimEvent{time, id, kind, detail, std::move(action)});
    return id;
}

EventId
Engine::schedule_in(double delay, EventKind kind, std::function<void()> action, EventDetail detail)
{
    return schedule(m_now + delay, kind, std::move(action), detail);
}

std::optional<double>
Engine::next_time() const
{
    if (m_queue.empty())
    {
        return std::nullopt;
    }
    return m_queue.top().time;
}

std::size_t
Engine::run(double until)
{
    if (until < m_now)
    {
        throw std::invalid_argument("run horizon precedes the current clock");
    }
    std::size_t count = 0;
    while (!m_queue.empty() && m_queue.top().time <= until)
    {
        // priority_queue::top is const; the event is copied out before pop.
        SimEvent ev = m_queue.top();
        m_queue.pop();
        m_now = ev.time;
        if (m_trace != nullptr)
        {
            write_trace(ev);
        }
        if (ev.action)
        {
            ev.action();
        }
        ++count;
        ++m_processed;
    }
    m_now = until;
    return count;
}

void
Engine::write_trace(const SimEvent& ev)
{
    char buf[160];
    int n = std::snprintf(buf,
                          sizeof(buf),
                          "%.9f\t%llu\t%.*s\t",
                          ev.time,
                          static_cast<unsigned long long>(ev.sequence),
                          static_cast<int>(to_string(ev.kind).size()),
                          to_string(ev.kind).data());
    std::string detail;
    if (ev.detail.node >= 0)
    {
        detail += "node=" + std::to_string(ev.detail.node);
    }
    if (ev.detail.item >= 0)
    {
        if (!detail.empty())
        {
            detail += ' ';
        }
        detail += "item=" + std::to_string(ev.detail.item);
    }
    if (detail.empty())
    {
        detail = "-";
    }
    m_trace->write(buf, n);
    *m_trace << detail << '\n';
}

} // namespace sitesim
