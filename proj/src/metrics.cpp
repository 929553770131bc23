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

#include "sitesim/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sitesim
{

std::uint64_t
FlowStats::dropped_total() const
{
    std::uint64_t total = 0;
    for (auto d : drops_by_cause)
    {
        total += d;
    }
    return total;
}

bool
FlowStats::conserved() const
{
    return tx_packets == rx_packets + dropped_total() + in_flight;
}

FlowMetrics
finalize(const FlowStats& stats, double duration_s)
{
    if (!(duration_s > 0.0))
    {
        throw std::invalid_argument("finalize requires a positive duration");
    }
    FlowMetrics m;
    m.throughput_bps = static_cast<double>(stats.rx_bytes) * 8.0 / duration_s;
    m.loss = stats.tx_packets == 0
                 ? 0.0
                 : 1.0 - static_cast<double>(stats.rx_packets) / static_cast<double>(stats.tx_packets);
    if (stats.rx_packets > 0)
    {
        m.mean_delay_s = stats.delay_sum_s / static_cast<double>(stats.rx_packets);
    }
    return m;
}

FlowMonitor::FlowMonitor(std::size_t flow_count)
    : m_window(flow_count),
      m_lifetime(flow_count),
      m_state(flow_count)
{
    for (std::size_t i = 0; i < flow_count; ++i)
    {
        m_window[i].flow_id = static_cast<int>(i);
        m_lifetime[i].flow_id = static_cast<int>(i);
    }
}

FlowMonitor::State&
FlowMonitor::state_of(const Packet& pkt)
{
    if (pkt.flow_id < 0 || static_cast<std::size_t>(pkt.flow_id) >= m_state.size() || pkt.seq < 0)
    {
        throw std::logic_error("packet refers to an unknown flow");
    }
    auto& v = m_state[pkt.flow_id];
    if (static_cast<std::size_t>(pkt.seq) >= v.size())
    {
        v.resize(static_cast<std::size_t>(pkt.seq) + 1, State::Unknown);
    }
    return v[pkt.seq];
}

void
FlowMonitor::on_created(const Packet& pkt)
{
    State& s = state_of(pkt);
    if (s != State::Unknown)
    {
        throw std::logic_error("packet created twice");
    }
    s = State::Created;
    for (FlowStats* f : {&m_lifetime[pkt.flow_id], pkt.counted ? &m_window[pkt.flow_id] : nullptr})
    {
        if (f != nullptr)
        {
            ++f->tx_packets;
            f->tx_bytes += pkt.size_bytes;
            ++f->in_flight;
        }
    }
}

void
FlowMonitor::on_dropped(const Packet& pkt)
{
    State& s = state_of(pkt);
    if (s != State::Created)
    {
        throw std::logic_error("drop of a packet that is not in flight");
    }
    if (pkt.drop_cause == DropCause::None)
    {
        throw std::logic_error("drop without a cause");
    }
    s = State::Dropped;
    for (FlowStats* f : {&m_lifetime[pkt.flow_id], pkt.counted ? &m_window[pkt.flow_id] : nullptr})
    {
        if (f != nullptr)
        {
            ++f->drops_by_cause[static_cast<std::size_t>(pkt.drop_cause)];
            --f->in_flight;
        }
    }
}

void
FlowMonitor::on_delivered(Packet& pkt, double t)
{
    State& s = state_of(pkt);
    if (s == State::Delivered)
    {
        throw std::logic_error("duplicate delivery of flow " + std::to_string(pkt.flow_id) + " seq " +
                               std::to_string(pkt.seq));
    }
    if (s != State::Created)
    {
        throw std::logic_error("delivery of a packet that is not in flight");
    }
    if (t < pkt.t_created)
    {
        throw std::logic_error("delivery precedes creation");
    }
    s = State::Delivered;
    pkt.t_delivered = t;
    for (FlowStats* f : {&m_lifetime[pkt.flow_id], pkt.counted ? &m_window[pkt.flow_id] : nullptr})
    {
        if (f != nullptr)
        {
            ++f->rx_packets;
            f->rx_bytes += pkt.size_bytes;
            f->delay_sum_s += t - pkt.t_created;
            --f->in_flight;
        }
    }
}

std::uint64_t
FlowMonitor::in_flight_total() const
{
    std::uint64_t n = 0;
    for (const auto& f : m_lifetime)
    {
        n += f.in_flight;
    }
    return n;
}

void
summarize_run(RunResult& r)
{
    if (!(r.window_s > 0.0))
    {
        throw std::invalid_argument("run summary requires a positive measurement window");
    }
    FlowStats total;
    for (const auto& f : r.flows)
    {
        total.tx_packets += f.tx_packets;
        total.tx_bytes += f.tx_bytes;
        total.rx_packets += f.rx_packets;
        total.rx_bytes += f.rx_bytes;
        total.delay_sum_s += f.delay_sum_s;
    }
    const FlowMetrics m = finalize(total, r.window_s);
    r.throughput_bps = m.throughput_bps;
    r.loss = m.loss;
    r.mean_delay_s = m.mean_delay_s;
    r.offered_bps = static_cast<double>(total.tx_bytes) * 8.0 / r.window_s;
}

namespace
{

struct MeanStd
{
    double mean = 0.0;
    double std = 0.0;
};

MeanStd
mean_std(const std::vector<double>& xs)
{
    MeanStd out;
    if (xs.empty())
    {
        return out;
    }
    double sum = 0.0;
    for (double x : xs)
    {
        sum += x;
    }
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1)
    {
        double ss = 0.0;
        for (double x : xs)
        {
            ss += (x - out.mean) * (x - out.mean);
        }
        out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

std::string
fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

SweepPointSummary
aggregate_replications(std::span<const RunResult> results)
{
    if (results.empty())
    {
        throw std::invalid_argument("no replications to aggregate");
    }
    std::vector<const RunResult*> ordered;
    for (const auto& r : results)
    {
        ordered.push_back(&r);
    }
    std::sort(ordered.begin(), ordered.end(), [](const RunResult* a, const RunResult* b) {
        return a->replication < b->replication;
    });

    const RunResult& first = *ordered.front();
    for (const RunResult* r : ordered)
    {
        if (r->scenario != first.scenario || r->rat != first.rat || r->sweep_variable != first.sweep_variable ||
            r->sweep_index != first.sweep_index || r->sweep_value != first.sweep_value)
        {
            throw std::invalid_argument("cannot aggregate replications from different sweep points");
        }
    }

    std::vector<double> tput;
    std::vector<double> loss;
    std::vector<double> delay;
    for (const RunResult* r : ordered)
    {
        tput.push_back(r->throughput_bps);
        loss.push_back(r->loss);
        if (r->mean_delay_s)
        {
            delay.push_back(*r->mean_delay_s);
        }
    }

    SweepPointSummary s;
    s.scenario = first.scenario;
    s.sweep_variable = first.sweep_variable;
    s.sweep_value = first.sweep_value;
    s.sweep_index = first.sweep_index;
    s.rat = first.rat;
    s.ue_count = first.ue_count;
    s.offered_mbps_per_ue = first.offered_mbps_per_ue;
    s.speed_kmh = first.speed_kmh;
    s.replications = static_cast<int>(ordered.size());
    s.seed_base = first.seed_base;
    const MeanStd t = mean_std(tput);
    const MeanStd l = mean_std(loss);
    s.throughput_bps = t.mean;
    s.throughput_std_bps = t.std;
    s.loss = l.mean;
    s.loss_std = l.std;
    if (!delay.empty())
    {
        const MeanStd d = mean_std(delay);
        s.mean_delay_s = d.mean;
        s.delay_std_s = d.std;
    }
    return s;
}

std::string
format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string
render_csv(std::span<const SweepPointSummary> rows)
{
    std::vector<const SweepPointSummary*> ordered;
    for (const auto& r : rows)
    {
        ordered.push_back(&r);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const SweepPointSummary* a, const SweepPointSummary* b) {
        if (a->rat != b->rat)
        {
            return a->rat < b->rat;
        }
        if (a->sweep_value != b->sweep_value)
        {
            return a->sweep_value < b->sweep_value;
        }
        return a->sweep_index < b->sweep_index;
    });

    std::string out = kCsvHeader;
    out += '\n';
    for (const SweepPointSummary* r : ordered)
    {
        out += r->scenario;
        out += ',';
        out += to_string(r->rat);
        out += ',';
        out += std::to_string(r->ue_count);
        out += ',';
        out += format_number(r->offered_mbps_per_ue);
        out += ',';
        out += format_number(r->speed_kmh);
        out += ',';
        out += std::to_string(r->replications);
        out += ',';
        out += fixed6(r->throughput_bps / 1e6);
        out += ',';
        out += fixed6(r->loss);
        out += ',';
        if (r->mean_delay_s)
        {
            out += fixed6(*r->mean_delay_s * 1e3);
        }
        out += ',';
        if (r->delay_std_s)
        {
            out += fixed6(*r->delay_std_s * 1e3);
        }
        out += ',';
        out += std::to_string(r->seed_base);
        out += '\n';
    }
    return out;
}

void
export_csv(std::span<const SweepPointSummary> rows, const std::filesystem::path& path)
{
    if (rows.empty())
    {
        throw std::invalid_argument("refusing to export an empty result set");
    }
    const std::string text = render_csv(rows);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out)
    {
        throw std::runtime_error("failed writing results to '" + path.string() + "'");
    }
}

} // namespace sitesim
