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

#ifndef SITESIM_ENGINE_HPP
#define SITESIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <queue>
#include <string_view>
#include <vector>

namespace sitesim
{

using EventId = std::uint64_t;

enum class EventKind : std::uint8_t
{
    StreamStart,
    StreamStop,
    PacketArrival,
    SlotBoundary,
    BeamRefresh,
    Delivery,
    HarqDrop,
    SimulationEnd,
    Generic,
};

std::string_view to_string(EventKind kind);

/// Optional identifiers printed in the trace detail column.
struct EventDetail
{
    std::int64_t node = -1;
    std::int64_t item = -1;
};

struct SimEvent
{
    double time = 0.0;
    std::uint64_t sequence = 0;
    EventKind kind = EventKind::Generic;
    EventDetail detail;
    std::function<void()> action;
};

/// Single-threaded discrete-event core.
///
/// Events are ordered by (time, sequence); the sequence is the insertion
/// counter, so simultaneous events run in the order they were scheduled.
class Engine
{
  public:
    Engine() = default;
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    /// Throws std::invalid_argument if time precedes the clock or is not finite.
    EventId schedule(double time,
                     EventKind kind,
                     std::function<void()> action,
                     EventDetail detail = {});
    EventId schedule_in(double delay,
                        EventKind kind,
                        std::function<void()> action,
                        EventDetail detail = {});

    /// Processes every event with time <= until, then sets the clock to until.
    std::size_t run(double until);

    double now() const { return m_now; }
    bool empty() const { return m_queue.empty(); }
    std::size_t pending() const { return m_queue.size(); }
    std::optional<double> next_time() const;
    std::uint64_t processed() const { return m_processed; }

    /// One line per processed event: time<TAB>sequence<TAB>kind<TAB>detail.
    /// Pass nullptr to disable.
    void set_trace(std::ostream* out) { m_trace = out; }

  private:
    struct Later
    {
        bool operator()(const SimEvent& a, const SimEvent& b) const
        {
            if (a.time != b.time)
            {
                return a.time > b.time;
            }
            return a.sequence > b.sequence;
        }
    };

    void write_trace(const SimEvent& ev);

    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> m_queue;
    double m_now = 0.0;
    std::uint64_t m_next_sequence = 0;
    std::uint64_t m_processed = 0;
    std::ostream* m_trace = nullptr;
};

} // namespace sitesim

#endif // SITESIM_ENGINE_HPP
