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

#ifndef SITESIM_SWEEP_HPP
#define SITESIM_SWEEP_HPP

#include "sitesim/cell_simulation.hpp"
#include "sitesim/config.hpp"
#include "sitesim/metrics.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sitesim
{

struct SweepJob
{
    Rat rat = Rat::Lte;
    std::size_t sweep_index = 0;
    int replication = 0;
};

/// Jobs ordered by RAT (LTE first), sweep index, replication. The RAT order in
/// the config does not matter.
std::vector<SweepJob> plan_jobs(const ScenarioConfig& cfg);

/// Seed of one replication. Both RATs share it, so a sweep point compares the
/// two technologies on the same traffic offsets.
std::uint64_t replication_seed(std::uint64_t seed_base, std::size_t sweep_index, int replication);

RunSpec build_run_spec(const ScenarioConfig& cfg, const SweepJob& job);

struct SweepOutput
{
    std::vector<RunResult> runs;                // plan_jobs order
    std::vector<SweepPointSummary> summaries;   // one per (rat, sweep point)
};

struct SweepOptions
{
    int threads = 1;
    /// Directory for per-run event traces; nullopt disables tracing.
    std::optional<std::filesystem::path> trace_dir;
};

/// Thrown when one run fails; the message names the sweep point.
class SweepError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

SweepOutput run_scenario_serial(const ScenarioConfig& cfg, const SweepOptions& opts = {});
SweepOutput run_scenario_parallel(const ScenarioConfig& cfg, const SweepOptions& opts);

std::string trace_file_name(const RunResult& r);
std::string trace_file_name(const ScenarioConfig& cfg, const SweepJob& job);

} // namespace sitesim

#endif // SITESIM_SWEEP_HPP
