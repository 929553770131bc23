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

#include "sitesim/cell_simulation.hpp"

#include "sitesim/engine.hpp"
#include "sitesim/harq.hpp"
#include "sitesim/link_adaptation.hpp"
#include "sitesim/numerology.hpp"
#include "sitesim/rng_stream.hpp"
#include "sitesim/scheduler.hpp"
#include "sitesim/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sitesim
{

namespace
{

struct UeState
{
    explicit UeState(std::size_t capacity, std::size_t index, std::uint64_t seed)
        : queue(capacity),
          shadow_rng("shadow/ue" + std::to_string(index), seed),
          beam_rng("beam/ue" + std::to_string(index), seed),
          harq_rng("harq/ue" + std::to_string(index), seed)
    {
    }

    FlowQueue queue;
    RngStream shadow_rng;
    RngStream beam_rng;
    RngStream harq_rng;
    bool in_coverage = true;
    double nominal_snr_db = 0.0; // what link adaptation sees
    double actual_snr_db = 0.0;  // nominal minus mobility penalty
    double rate_bps = 0.0;       // full-band rate at the nominal SNR
};

class Cell
{
  public:
    Cell(const RunSpec& spec, std::ostream* trace)
        : m_spec(spec),
          m_tti_s(slot_duration_s(spec.phy.scs_khz)),
          m_la(spec.phy.link_adaptation()),
          m_harq(spec.phy.harq()),
          m_bler(spec.phy.bler()),
          m_monitor(spec.ues.size()),
          m_sched(spec.ues.size(), spec.phy.pf_window)
    {
        m_la.validate();
        m_harq.validate();
        m_bler.validate();
        if (spec.ues.empty())
        {
            throw std::invalid_argument("a run needs at least one UE");
        }
        if (!(spec.channel_refresh_s > 0.0))
        {
            throw std::invalid_argument("channel refresh period must be positive");
        }
        m_window_start = std::max(spec.warmup_s, spec.traffic.app_start_s);
        m_traffic_end = std::min(spec.traffic.app_stop_s, spec.duration_s);
        if (!(m_traffic_end > m_window_start))
        {
            throw std::invalid_argument("empty measurement window");
        }
        m_engine.set_trace(trace);

        for (std::size_t i = 0; i < spec.ues.size(); ++i)
        {
            spec.ues[i].validate();
            m_ues.emplace_back(static_cast<std::size_t>(spec.traffic.queue_capacity_pkts), i, spec.seed);

            VideoStream vs;
            vs.flow_id = static_cast<int>(i);
            vs.rate_bps = spec.rate_bps_per_ue;
            vs.packet_size_bytes = spec.traffic.packet_size_bytes;
            RngStream offset_rng("traffic/ue" + std::to_string(i), spec.seed);
            vs.start_s = spec.traffic.app_start_s + offset_rng.uniform(0.0, vs.interval_s());
            vs.stop_s = std::max(vs.start_s, m_traffic_end);
            vs.validate();
            m_sources.emplace_back(vs);
        }
    }

    RunResult run()
    {
        for (std::size_t i = 0; i < m_sources.size(); ++i)
        {
            schedule_arrival(i);
        }
        m_engine.schedule(0.0, EventKind::BeamRefresh, [this] { refresh(0); });
        m_engine.schedule(0.0, EventKind::SlotBoundary, [this] { slot(0); });
        while (const auto t = m_engine.next_time())
        {
            m_engine.run(*t);
        }
        if (m_monitor.in_flight_total() != 0)
        {
            throw std::logic_error("packets left in flight after the drain");
        }

        RunResult r;
        r.scenario = m_spec.scenario;
        r.sweep_variable = m_spec.sweep_variable;
        r.sweep_value = m_spec.sweep_value;
        r.sweep_index = m_spec.sweep_index;
        r.rat = m_spec.rat;
        r.ue_count = static_cast<int>(m_spec.ues.size());
        r.offered_mbps_per_ue = m_spec.rate_bps_per_ue / 1e6;
        r.speed_kmh = m_spec.speed_kmh;
        r.flows = m_monitor.window();
        r.lifetime = m_monitor.lifetime();
        r.window_s = m_traffic_end - m_window_start;
        r.seed = m_spec.seed;
        r.seed_base = m_spec.seed_base;
        r.replication = m_spec.replication;
        summarize_run(r);
        return r;
    }

  private:
    static EventDetail detail(std::size_t ue, std::int64_t item = -1)
    {
        return {static_cast<std::int64_t>(ue), item};
    }

    void schedule_arrival(std::size_t ue)
    {
        const auto t = m_sources[ue].peek();
        if (!t)
        {
            return;
        }
        m_engine.schedule(
            *t, EventKind::PacketArrival, [this, ue] { arrival(ue); }, detail(ue, m_sources[ue].emitted()));
    }

    void arrival(std::size_t ue)
    {
        Packet pkt = m_sources[ue].emit();
        pkt.counted = pkt.t_created >= m_window_start && pkt.t_created < m_traffic_end;
        m_monitor.on_created(pkt);
        UeState& u = m_ues[ue];
        if (!u.in_coverage)
        {
            pkt.drop_cause = DropCause::OutOfCoverage;
            m_monitor.on_dropped(pkt);
        }
        else if (u.queue.enqueue(pkt) == EnqueueResult::Dropped)
        {
            m_monitor.on_dropped(pkt);
        }
        schedule_arrival(ue);
    }

    bool sources_done() const
    {
        return std::all_of(m_sources.begin(), m_sources.end(), [](const CbrSource& s) { return !s.peek(); });
    }

    bool queues_empty() const
    {
        return std::all_of(m_ues.begin(), m_ues.end(), [](const UeState& u) { return u.queue.empty(); });
    }

    void drop_queue(UeState& u, DropCause cause)
    {
        for (Packet& p : u.queue.flush())
        {
            p.drop_cause = cause;
            m_monitor.on_dropped(p);
        }
    }

    void refresh(std::uint64_t period)
    {
        if (m_stopped)
        {
            return;
        }
        const double t = m_engine.now();
        for (std::size_t i = 0; i < m_ues.size(); ++i)
        {
            UeState& u = m_ues[i];
            const double d = norm(position_at(m_spec.ues[i], t));
            double shadow = 0.0;
            if (m_spec.rat == Rat::NrMmWave && m_spec.mmwave.sigma_db > 0.0)
            {
                shadow = u.shadow_rng.normal(0.0, m_spec.mmwave.sigma_db);
            }
            const double penalty =
                velocity_penalty_db(m_spec.rat, m_spec.speed_kmh, m_spec.velocity, u.beam_rng, period);
            const auto sample = snr_db(m_spec.radio, m_spec.mmwave, d, 0.0, shadow);
            const double rate = sample ? achievable_rate_bps(sample->snr_db, m_spec.radio.bandwidth_hz, m_la) : 0.0;
            u.in_coverage = rate > 0.0;
            if (!u.in_coverage)
            {
                drop_queue(u, DropCause::OutOfCoverage);
                u.rate_bps = 0.0;
                continue;
            }
            u.nominal_snr_db = sample->snr_db;
            u.actual_snr_db = sample->snr_db - penalty;
            u.rate_bps = rate;
        }
        m_engine.schedule((static_cast<double>(period) + 1.0) * m_spec.channel_refresh_s,
                          EventKind::BeamRefresh,
                          [this, period] { refresh(period + 1); });
    }

    void slot(std::uint64_t k)
    {
        const double t = m_engine.now();
        for (std::size_t i = 0; i < m_ues.size(); ++i)
        {
            m_sched.backlog_bytes[i] = m_ues[i].in_coverage ? m_ues[i].queue.backlog_bytes() : 0.0;
        }

        std::vector<double> budget(m_ues.size(), 0.0);
        if (m_spec.rat == Rat::Lte)
        {
            std::vector<double> per_rb(m_ues.size());
            for (std::size_t i = 0; i < m_ues.size(); ++i)
            {
                per_rb[i] = m_ues[i].rate_bps / m_spec.phy.rb_count;
            }
            const auto grant = pf_schedule(m_sched, per_rb, m_spec.phy.rb_count, m_tti_s);
            for (std::size_t i = 0; i < m_ues.size(); ++i)
            {
                budget[i] = grant[i] * per_rb[i] * m_tti_s / 8.0;
            }
        }
        else if (const auto ue = m_rr.next(m_sched, k))
        {
            budget[*ue] = m_ues[*ue].rate_bps * m_tti_s / 8.0;
        }

        const double t_end = t + m_tti_s;
        for (std::size_t i = 0; i < m_ues.size(); ++i)
        {
            if (budget[i] <= 0.0)
            {
                continue;
            }
            UeState& u = m_ues[i];
            for (Packet& p : u.queue.serve(budget[i]))
            {
                const HarqOutcome out = harq_transmit(p, u.actual_snr_db, m_harq, m_bler, u.harq_rng);
                if (out.delivered)
                {
                    const double at = t_end + out.added_delay_s + m_spec.traffic.core_latency_ms * 1e-3;
                    m_engine.schedule(
                        at,
                        EventKind::Delivery,
                        [this, p, at]() mutable { m_monitor.on_delivered(p, at); },
                        detail(i, p.seq));
                }
                else
                {
                    m_engine.schedule(
                        t_end + out.added_delay_s,
                        EventKind::HarqDrop,
                        [this, p] { m_monitor.on_dropped(p); },
                        detail(i, p.seq));
                }
            }
        }

        const double next = static_cast<double>(k + 1) * m_tti_s;
        if (sources_done() && queues_empty())
        {
            m_stopped = true;
            return;
        }
        if (next > m_traffic_end + m_spec.drain_limit_s)
        {
            // Anything still queued this long after the traffic stopped never
            // reached the base station.
            for (UeState& u : m_ues)
            {
                drop_queue(u, DropCause::OutOfCoverage);
            }
            m_stopped = true;
            return;
        }
        m_engine.schedule(next, EventKind::SlotBoundary, [this, k] { slot(k + 1); });
    }

    const RunSpec& m_spec;
    double m_tti_s;
    LinkAdaptation m_la;
    HarqProcess m_harq;
    BlerModel m_bler;
    Engine m_engine;
    FlowMonitor m_monitor;
    SchedulerState m_sched;
    RoundRobinScheduler m_rr;
    std::vector<UeState> m_ues;
    std::vector<CbrSource> m_sources;
    double m_window_start = 0.0;
    double m_traffic_end = 0.0;
    bool m_stopped = false;
};

} // namespace

RunResult
simulate(const RunSpec& spec, std::ostream* trace)
{
    Cell cell(spec, trace);
    return cell.run();
}

} // namespace sitesim
