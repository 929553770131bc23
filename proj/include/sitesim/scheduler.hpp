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

#ifndef SITESIM_SCHEDULER_HPP
#define SITESIM_SCHEDULER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sitesim
{

inline constexpr double kPfInitialAverageBps = 1000.0;

/// Per-UE scheduler bookkeeping shared by both MAC flavours.
struct SchedulerState
{
    std::vector<double> avg_rate_bps;  // exponentially smoothed served rate
    std::vector<double> backlog_bytes; // bytes waiting in the UE buffer
    int window = 100;                  // smoothing window in scheduling intervals

    SchedulerState() = default;
    SchedulerState(std::size_t ue_count, int window, double initial_avg_bps = kPfInitialAverageBps);

    std::size_t size() const { return backlog_bytes.size(); }
    bool backlogged(std::size_t ue) const { return backlog_bytes[ue] > 0.0; }
};

/// Proportional-fair resource-block allocation for one scheduling interval.
///
/// Each RB goes to the backlogged UE with the highest rate / average ratio;
/// ties go to the lowest UE index. A UE stops competing once the RBs it holds
/// cover its backlog. Afterwards every average is smoothed with the rate the
/// UE was actually served this interval.
///
/// rates_bps holds the per-RB rate of each UE. Returns RBs granted per UE.
std::vector<int> pf_schedule(SchedulerState& state, std::span<const double> rates_bps, int resources, double tti_s);

/// Slot-level round robin (one UE owns a whole slot).
///
/// The rotation pointer remembers the last served UE; the next slot goes to
/// the first backlogged UE after it in index order, so a UE that turns
/// backlogged mid-rotation is reached within ue_count slots.
class RoundRobinScheduler
{
  public:
    std::optional<std::size_t> next(const SchedulerState& state, std::uint64_t slot);

    std::optional<std::size_t> last_served() const { return m_last; }

  private:
    std::optional<std::size_t> m_last;
};

} // namespace sitesim

#endif // SITESIM_SCHEDULER_HPP
