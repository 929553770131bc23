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

#include "sitesim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>

namespace sitesim
{

std::vector<SweepJob>
plan_jobs(const ScenarioConfig& cfg)
{
    std::vector<SweepJob> jobs;
    for (Rat rat : {Rat::Lte, Rat::NrMmWave})
    {
        if (std::find(cfg.rats.begin(), cfg.rats.end(), rat) == cfg.rats.end())
        {
            continue;
        }
        for (std::size_t s = 0; s < cfg.sweep_values.size(); ++s)
        {
            for (int rep = 0; rep < cfg.replications; ++rep)
            {
                jobs.push_back({rat, s, rep});
            }
        }
    }
    return jobs;
}

std::uint64_t
replication_seed(std::uint64_t seed_base, std::size_t sweep_index, int replication)
{
    return mix64((seed_base + static_cast<std::uint64_t>(replication)) ^
                 mix64(static_cast<std::uint64_t>(sweep_index) + 0x5157'0000'0000'0001ULL));
}

namespace
{

std::string
scenario_label(const ScenarioConfig& cfg, std::size_t sweep_index)
{
    std::string name = cfg.scenario_name();
    if (cfg.sweep_variable == SweepVariable::StartDistance)
    {
        // The CSV has no distance column; keep rows distinguishable.
        name += "/start_distance=" + format_number(cfg.sweep_values[sweep_index]);
    }
    return name;
}

} // namespace

RunSpec
build_run_spec(const ScenarioConfig& cfg, const SweepJob& job)
{
    if (job.sweep_index >= cfg.sweep_values.size())
    {
        throw std::out_of_range("sweep index out of range");
    }
    const double value = cfg.sweep_values[job.sweep_index];
    const RadioSection& radio = cfg.radio(job.rat);

    RunSpec s;
    s.scenario = scenario_label(cfg, job.sweep_index);
    s.sweep_variable = std::string(to_string(cfg.sweep_variable));
    s.sweep_value = value;
    s.sweep_index = job.sweep_index;
    s.replication = job.replication;
    s.rat = job.rat;
    s.radio = radio.radio_config(job.rat);
    s.mmwave = radio.mmwave();
    s.velocity = radio.velocity();
    s.channel_refresh_s = radio.beam_refresh_ms * 1e-3;
    s.phy = cfg.phy(job.rat);
    s.traffic = cfg.traffic;
    s.duration_s = cfg.duration_s;
    s.warmup_s = cfg.warmup_s;
    s.seed_base = cfg.seed_base;
    s.seed = replication_seed(cfg.seed_base, job.sweep_index, job.replication);

    int n = cfg.ue_count;
    double rate_mbps = cfg.traffic.data_volume_mbps;
    double speed = cfg.mobility.speed_kmh;
    std::optional<double> start_r;
    switch (cfg.sweep_variable)
    {
    case SweepVariable::UeCount:
        n = static_cast<int>(value);
        break;
    case SweepVariable::DataVolume:
        rate_mbps = value;
        break;
    case SweepVariable::Speed:
        speed = value;
        break;
    case SweepVariable::StartDistance:
        start_r = value;
        break;
    }
    s.rate_bps_per_ue = rate_mbps * 1e6;
    s.speed_kmh = speed;

    const auto& m = cfg.mobility;
    for (int i = 0; i < n; ++i)
    {
        const double angle = 2.0 * std::numbers::pi * i / n;
        const double r0 = start_r ? *start_r : m.placement.radius(static_cast<std::size_t>(i), static_cast<std::size_t>(n));
        s.ues.push_back(MobilityState::radial(angle, r0, kmh_to_mps(speed), m.corridor_min_m, m.corridor_max_m));
    }
    return s;
}

std::string
trace_file_name(const RunResult& r)
{
    std::string scenario = r.scenario;
    for (char& c : scenario)
    {
        if (c == '/' || c == '=')
        {
            c = '-';
        }
    }
    return scenario + "_" + std::string(to_string(r.rat)) + "_" + format_number(r.sweep_value) + "_" +
           std::to_string(r.replication) + ".trace";
}

std::string
trace_file_name(const ScenarioConfig& cfg, const SweepJob& job)
{
    RunResult r;
    r.scenario = scenario_label(cfg, job.sweep_index);
    r.rat = job.rat;
    r.sweep_value = cfg.sweep_values.at(job.sweep_index);
    r.replication = job.replication;
    return trace_file_name(r);
}

namespace
{

RunResult
run_job(const ScenarioConfig& cfg, const SweepJob& job, const SweepOptions& opts)
{
    try
    {
        const RunSpec spec = build_run_spec(cfg, job);
        if (!opts.trace_dir)
        {
            return simulate(spec);
        }
        const auto path = *opts.trace_dir / trace_file_name(cfg, job);
        std::ofstream trace(path);
        if (!trace)
        {
            throw std::runtime_error("cannot open trace file " + path.string());
        }
        return simulate(spec, &trace);
    }
    catch (const std::exception& e)
    {
        throw SweepError("run failed at " + std::string(to_string(cfg.sweep_variable)) + "=" +
                         format_number(cfg.sweep_values[job.sweep_index]) + " rat=" +
                         std::string(to_string(job.rat)) + " replication=" + std::to_string(job.replication) +
                         ": " + e.what());
    }
}

SweepOutput
collect(std::vector<RunResult> runs, const std::vector<SweepJob>& jobs)
{
    SweepOutput out;
    std::size_t begin = 0;
    while (begin < jobs.size())
    {
        std::size_t end = begin;
        while (end < jobs.size() && jobs[end].rat == jobs[begin].rat &&
               jobs[end].sweep_index == jobs[begin].sweep_index)
        {
            ++end;
        }
        out.summaries.push_back(
            aggregate_replications(std::span<const RunResult>(runs.data() + begin, end - begin)));
        begin = end;
    }
    out.runs = std::move(runs);
    return out;
}

void
check(const ScenarioConfig& cfg)
{
    const auto problems = validate(cfg);
    if (!problems.empty())
    {
        throw ConfigError(problems);
    }
}

} // namespace

SweepOutput
run_scenario_serial(const ScenarioConfig& cfg, const SweepOptions& opts)
{
    check(cfg);
    const auto jobs = plan_jobs(cfg);
    std::vector<RunResult> runs;
    runs.reserve(jobs.size());
    for (const auto& job : jobs)
    {
        runs.push_back(run_job(cfg, job, opts));
    }
    return collect(std::move(runs), jobs);
}

SweepOutput
run_scenario_parallel(const ScenarioConfig& cfg, const SweepOptions& opts)
{
    check(cfg);
    const auto jobs = plan_jobs(cfg);
    std::vector<RunResult> runs(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const auto n = static_cast<std::int64_t>(jobs.size());
    const int threads = std::max(1, opts.threads);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t j = 0; j < n; ++j)
    {
        try
        {
            runs[j] = run_job(cfg, jobs[j], opts);
        }
        catch (...)
        {
            errors[j] = std::current_exception();
        }
    }
    // Report the first failure in job order so the message does not depend on
    // thread timing.
    for (const auto& e : errors)
    {
        if (e)
        {
            std::rethrow_exception(e);
        }
    }
    return collect(std::move(runs), jobs);
}

} // namespace sitesim
