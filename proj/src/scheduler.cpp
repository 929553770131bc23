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

#include "sitesim/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace sitesim
{

SchedulerState::SchedulerState(std::size_t ue_count, int window_, double initial_avg_bps)
    : avg_rate_bps(ue_count, initial_avg_bps),
      backlog_bytes(ue_count, 0.0),
      window(window_)
{
    if (window < 1)
    {
        throw std::invalid_argument("pf_window must be >= 1");
    }
    if (!(initial_avg_bps > 0.0))
    {
        throw std::invalid_argument("initial PF average must be positive");
    }
}

std::vector<int>
pf_schedule(SchedulerState& state, std::span<const double> rates_bps, int resources, double tti_s)
{
    const std::size_t n = state.size();
    if (rates_bps.size() != n)
    {
        throw std::invalid_argument("pf_schedule: rate vector does not match UE count");
    }
    if (resources <= 0)
    {
        throw std::invalid_argument("pf_schedule: resource count must be positive");
    }

    std::vector<int> grant(n, 0);
    std::vector<double> remaining(state.backlog_bytes.begin(), state.backlog_bytes.end());

    for (int rb = 0; rb < resources; ++rb)
    {
        std::optional<std::size_t> best;
        double best_metric = 0.0;
        for (std::size_t ue = 0; ue < n; ++ue)
        {
            if (remaining[ue] <= 0.0 || rates_bps[ue] <= 0.0)
            {
                continue;
            }
            const double metric = rates_bps[ue] / state.avg_rate_bps[ue];
            if (!best || metric > best_metric)
            {
                best = ue;
                best_metric = metric;
            }
        }
        if (!best)
        {
            break;
        }
        ++grant[*best];
        remaining[*best] -= rates_bps[*best] * tti_s / 8.0;
    }

    const double alpha = 1.0 / static_cast<double>(state.window);
    for (std::size_t ue = 0; ue < n; ++ue)
    {
        const double capacity_bytes = grant[ue] * rates_bps[ue] * tti_s / 8.0;
        const double served_bps = std::min(capacity_bytes, state.backlog_bytes[ue]) * 8.0 / tti_s;
        // Floor keeps long-idle averages from underflowing to zero.
        state.avg_rate_bps[ue] = std::max((1.0 - alpha) * state.avg_rate_bps[ue] + alpha * served_bps, 1e-9);
    }
    return grant;
}

std::optional<std::size_t>
RoundRobinScheduler::next(const SchedulerState& state, std::uint64_t /*slot*/)
{
    const std::size_t n = state.size();
    if (n == 0)
    {
        return std::nullopt;
    }
    const std::size_t start = m_last ? (*m_last + 1) % n : 0;
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t ue = (start + k) % n;
        if (state.backlogged(ue))
        {
            m_last = ue;
            return ue;
        }
    }
    return std::nullopt;
}

} // namespace sitesim
