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

// Serial vs OpenMP timings for the two parallel kernels. Both variants must
// produce identical output; the bench aborts if they do not.

#include "sitesim/config.hpp"
#include "sitesim/harq.hpp"
#include "sitesim/metrics.hpp"
#include "sitesim/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace
{

template <typename F>
double
seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int
main(int argc, char** argv)
{
    using namespace sitesim;
    int threads = 4;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1)
    {
        threads = std::atoi(argv[1]);
    }
    std::printf("threads: %d\n", threads);

    HarqProcess h;
    const std::uint64_t trials = 2'000'000;
    double serial = 0.0;
    double parallel = 0.0;
    const double ts = seconds([&] { serial = harq_delivery_rate_serial(0.3, h, trials, 42); });
    const double tp = seconds([&] { parallel = harq_delivery_rate_parallel(0.3, h, trials, 42, threads); });
    std::printf("harq_mc     trials=%llu serial=%.3fs parallel=%.3fs speedup=%.2f match=%s\n",
                static_cast<unsigned long long>(trials), ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
    if (serial != parallel)
    {
        return 1;
    }

    ScenarioConfig cfg = default_config(Preset::Scenario3);
    cfg.replications = 2;
    cfg.duration_s = 6.0;
    cfg.traffic.app_stop_s = 6.0;
    std::string csv_serial;
    std::string csv_parallel;
    const double ss = seconds([&] { csv_serial = render_csv(run_scenario_serial(cfg).summaries); });
    SweepOptions opts;
    opts.threads = threads;
    const double sp = seconds([&] { csv_parallel = render_csv(run_scenario_parallel(cfg, opts).summaries); });
    std::printf("sweep       runs=%zu serial=%.3fs parallel=%.3fs speedup=%.2f match=%s\n",
                plan_jobs(cfg).size(), ss, sp, ss / sp, csv_serial == csv_parallel ? "yes" : "NO");
    return csv_serial == csv_parallel ? 0 : 1;
}
