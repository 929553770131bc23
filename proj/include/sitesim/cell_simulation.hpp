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

#ifndef SITESIM_CELL_SIMULATION_HPP
#define SITESIM_CELL_SIMULATION_HPP

#include "sitesim/config.hpp"
#include "sitesim/metrics.hpp"
#include "sitesim/mobility.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sitesim
{

/// Everything one run needs: a single RAT at a single sweep point.
struct RunSpec
{
    std::string scenario;
    std::string sweep_variable;
    double sweep_value = 0.0;
    std::size_t sweep_index = 0;
    int replication = 0;

    Rat rat = Rat::Lte;
    RadioConfig radio;
    MmWavePathLossParams mmwave;
    VelocityModel velocity;
    double channel_refresh_s = 0.1;
    PhySection phy;
    TrafficSection traffic;

    std::vector<MobilityState> ues;
    double rate_bps_per_ue = 0.0;
    double speed_kmh = 0.0;

    double duration_s = 20.0;
    double warmup_s = 1.0;
    /// Hard stop for draining queues after the traffic ends.
    double drain_limit_s = 30.0;

    std::uint64_t seed = 0;
    std::uint64_t seed_base = 0;
};

/// Runs one cell to completion. Traffic stops at min(app_stop, duration);
/// the cell then keeps scheduling until queues and HARQ are empty so every
/// packet ends delivered or dropped.
RunResult simulate(const RunSpec& spec, std::ostream* trace = nullptr);

} // namespace sitesim

#endif // SITESIM_CELL_SIMULATION_HPP
