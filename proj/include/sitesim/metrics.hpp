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

#ifndef SITESIM_METRICS_HPP
#define SITESIM_METRICS_HPP

#include "sitesim/radio_channel.hpp"
#include "sitesim/traffic.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sitesim
{

inline constexpr std::size_t kDropCauseCount = 4;

struct FlowStats
{
    int flow_id = 0;
    std::uint64_t tx_packets = 0;
    std::uint64_t tx_bytes = 0;
    std::uint64_t rx_packets = 0;
    std::uint64_t rx_bytes = 0;
    double delay_sum_s = 0.0;
    std::array<std::uint64_t, kDropCauseCount> drops_by_cause{};
    std::uint64_t in_flight = 0;

    std::uint64_t drops(DropCause cause) const { return drops_by_cause[static_cast<std::size_t>(cause)]; }
    std::uint64_t dropped_total() const;
    /// tx == rx + drops + in_flight.
    bool conserved() const;
};

struct FlowMetrics
{
    double throughput_bps = 0.0;
    double loss = 0.0;
    std::optional<double> mean_delay_s; // absent when nothing was delivered
};

/// Throws std::invalid_argument for non-positive durations.
FlowMetrics finalize(const FlowStats& stats, double duration_s);

/// Per-flow packet accounting for one run.
///
/// Two ledgers are kept: one for every packet, one for packets created inside
/// the measurement window (after warm-up). Each packet must be created once
/// and terminated (delivered or dropped) at most once; violations throw
/// std::logic_error.
class FlowMonitor
{
  public:
    explicit FlowMonitor(std::size_t flow_count);

    void on_created(const Packet& pkt);
    void on_dropped(const Packet& pkt);
    /// Sink side: stamps t_delivered and books the delay sample. A second
    /// delivery of the same (flow, seq) throws.
    void on_delivered(Packet& pkt, double t);

    const std::vector<FlowStats>& window() const { return m_window; }
    const std::vector<FlowStats>& lifetime() const { return m_lifetime; }
    std::uint64_t in_flight_total() const;

  private:
    enum class State : std::uint8_t
    {
        Unknown,
        Created,
        Delivered,
        Dropped,
    };
    State& state_of(const Packet& pkt);

    std::vector<FlowStats> m_window;
    std::vector<FlowStats> m_lifetime;
    std::vector<std::vector<State>> m_state;
};

/// Outcome of one replication at one sweep point.
struct RunResult
{
    std::string scenario;
    std::string sweep_variable;
    double sweep_value = 0.0;
    std::size_t sweep_index = 0;
    Rat rat = Rat::Lte;
    int ue_count = 0;
    double offered_mbps_per_ue = 0.0;
    double speed_kmh = 0.0;
    std::vector<FlowStats> flows;    // measurement window
    std::vector<FlowStats> lifetime; // all packets
    double window_s = 0.0;
    double throughput_bps = 0.0;
    double offered_bps = 0.0;
    double loss = 0.0;
    std::optional<double> mean_delay_s;
    std::uint64_t seed = 0;
    std::uint64_t seed_base = 0;
    int replication = 0;
};

/// Fills the aggregate fields of a RunResult from its flows.
void summarize_run(RunResult& result);

/// Replication average at one (scenario, rat, sweep point).
struct SweepPointSummary
{
    std::string scenario;
    std::string sweep_variable;
    double sweep_value = 0.0;
    std::size_t sweep_index = 0;
    Rat rat = Rat::Lte;
    int ue_count = 0;
    double offered_mbps_per_ue = 0.0;
    double speed_kmh = 0.0;
    int replications = 0;
    double throughput_bps = 0.0;
    double throughput_std_bps = 0.0;
    double loss = 0.0;
    double loss_std = 0.0;
    std::optional<double> mean_delay_s;
    std::optional<double> delay_std_s;
    std::uint64_t seed_base = 0;
};

/// Arithmetic mean and sample standard deviation across replications.
/// Inputs are ordered by replication index first, so any permutation gives a
/// bit-identical summary. Throws std::invalid_argument for an empty list or
/// mixed sweep points.
SweepPointSummary aggregate_replications(std::span<const RunResult> results);

inline constexpr const char* kCsvHeader =
    "scenario,rat,ue_count,offered_mbps_per_ue,speed_kmh,replications,throughput_mbps,loss_rate,mean_delay_ms,"
    "delay_stddev_ms,seed_base";

/// Header plus one row per summary, ordered by rat then sweep value.
std::string render_csv(std::span<const SweepPointSummary> rows);

/// Throws std::invalid_argument for empty input (nothing is written) and
/// std::runtime_error naming the path when it cannot be written.
void export_csv(std::span<const SweepPointSummary> rows, const std::filesystem::path& path);

/// Shortest decimal form that round-trips.
std::string format_number(double v);

} // namespace sitesim

#endif // SITESIM_METRICS_HPP
