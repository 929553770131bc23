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

// Acceptance suite: one PASS/FAIL line per criterion. Runs the three preset
// sweeps at their default size (20 s, 5 replications) and checks the
// landmarks with the tolerances pinned below.

#include "sitesim/config.hpp"
#include "sitesim/harq.hpp"
#include "sitesim/metrics.hpp"
#include "sitesim/radio_channel.hpp"
#include "sitesim/rng_stream.hpp"
#include "sitesim/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace sitesim;

namespace
{

int g_failures = 0;

void
report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] criterion %2d: %s -- %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
    {
        ++g_failures;
    }
}

std::string
fmt(const char* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

// Rows of one RAT keyed by sweep value.
std::map<double, SweepPointSummary>
rows(const SweepOutput& out, Rat rat)
{
    std::map<double, SweepPointSummary> m;
    for (const auto& s : out.summaries)
    {
        if (s.rat == rat)
        {
            m.emplace(s.sweep_value, s);
        }
    }
    return m;
}

double
mbps(double bps)
{
    return bps / 1e6;
}

SweepOutput
timed(const char* name, const ScenarioConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    SweepOutput out = run_scenario_serial(cfg);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("# %s: %zu runs in %.1f s\n", name, out.runs.size(), s);
    return out;
}

double
friis_ref(double pt, double gt, double gr, double lambda, double d, double loss)
{
    const double pi = 3.14159265358979323846;
    return pt * gt * gr * lambda * lambda / ((4.0 * pi) * (4.0 * pi) * d * d * loss);
}

} // namespace

int
main()
{
    const ScenarioConfig c1 = default_config(Preset::Scenario1);
    const ScenarioConfig c2 = default_config(Preset::Scenario2);
    const ScenarioConfig c3 = default_config(Preset::Scenario3);
    std::printf("# calibration: nr tx %.1f dBm, gains %.0f+%.0f dBi, lte tx %.1f dBm, duration %.0f s, reps %d\n",
                c1.nr_radio.tx_power_dbm, c1.nr_radio.tx_gain_dbi, c1.nr_radio.rx_gain_dbi, c1.lte_radio.tx_power_dbm,
                c1.duration_s, c1.replications);

    const SweepOutput s1 = timed("scenario1", c1);
    const SweepOutput s2 = timed("scenario2", c2);
    const SweepOutput s3 = timed("scenario3", c3);

    // 1. LTE plateau. Nondecreasing up to the first UE >= 10 point, then flat:
    //    every plateau point inside 17 Mb/s +-15% and within 5% of the plateau
    //    mean.
    double plateau = 0.0;
    {
        const auto lte = rows(s1, Rat::Lte);
        bool ok = true;
        std::ostringstream d;
        double prev = 0.0;
        std::vector<double> flat;
        for (const auto& [n, r] : lte)
        {
            const double t = mbps(r.throughput_bps);
            d << fmt("%.0f", n) << ":" << fmt("%.2f", t) << " ";
            if (n <= 10.0)
            {
                ok = ok && t >= prev;
                prev = t;
            }
            if (n >= 10.0)
            {
                flat.push_back(t);
                ok = ok && std::abs(t - 17.0) <= 0.15 * 17.0;
            }
        }
        for (double t : flat)
        {
            plateau += t / static_cast<double>(flat.size());
        }
        for (double t : flat)
        {
            ok = ok && std::abs(t - plateau) <= 0.05 * plateau;
        }
        report(1, ok && !flat.empty(), "LTE saturates near 17 Mb/s", d.str() + "plateau " + fmt("%.2f", plateau));
    }

    // 2. NR tracks 2N Mb/s within 5% with loss < 1%.
    {
        bool ok = true;
        double worst_dev = 0.0;
        double worst_loss = 0.0;
        for (const auto& [n, r] : rows(s1, Rat::NrMmWave))
        {
            const double dev = std::abs(mbps(r.throughput_bps) - 2.0 * n) / (2.0 * n);
            worst_dev = std::max(worst_dev, dev);
            worst_loss = std::max(worst_loss, r.loss);
            ok = ok && dev <= 0.05 && r.loss < 0.01;
        }
        report(2, ok, "NR tracks offered load", "max deviation " + fmt("%.4f", worst_dev) + ", max loss " +
                                                     fmt("%.5f", worst_loss));
    }

    // 3. LTE overload at 5 Mb/s x 8 UEs.
    {
        const auto r = rows(s2, Rat::Lte).at(5.0);
        const double offered = 5.0 * 8.0;
        const double oracle = 1.0 - plateau / offered;
        const bool ok = r.loss > 0.5 && std::abs(r.loss - oracle) <= 0.05;
        report(3, ok, "LTE loss > 50% at 40 Mb/s offered",
               "loss " + fmt("%.4f", r.loss) + ", conservation oracle 1-plateau/offered " + fmt("%.4f", oracle));
    }

    // 4. NR delay bound at 5 Mb/s per UE.
    {
        const auto r = rows(s2, Rat::NrMmWave).at(5.0);
        const bool ok = r.mean_delay_s && *r.mean_delay_s <= 0.025;
        report(4, ok, "NR mean delay <= 25 ms at 5 Mb/s per UE",
               r.mean_delay_s ? fmt("%.3f ms", *r.mean_delay_s * 1e3) : "no delay sample");
    }

    // 5. Light-load delay ratio.
    {
        const auto lte = rows(s1, Rat::Lte).at(2.0);
        const auto nr = rows(s1, Rat::NrMmWave).at(2.0);
        bool ok = lte.mean_delay_s && nr.mean_delay_s;
        double ratio = 0.0;
        if (ok)
        {
            ratio = *lte.mean_delay_s / *nr.mean_delay_s;
            ok = std::abs(ratio - 2.0) <= 0.5;
        }
        report(5, ok, "LTE/NR delay ratio at 2 UEs is 2.0 +- 0.5",
               "lte " + fmt("%.3f", lte.mean_delay_s.value_or(0) * 1e3) + " ms, nr " +
                   fmt("%.3f", nr.mean_delay_s.value_or(0) * 1e3) + " ms, ratio " + fmt("%.3f", ratio));
    }

    // 6. Mobility knee.
    {
        const auto nr = rows(s3, Rat::NrMmWave);
        const auto lte = rows(s3, Rat::Lte);
        const double nr0 = nr.at(0.0).throughput_bps;
        bool ok = nr.at(50.0).throughput_bps < 0.5 * nr0;
        std::ostringstream d;
        d << "nr 50/0 " << fmt("%.3f", nr.at(50.0).throughput_bps / nr0);
        for (double v = 0.0; v <= 30.0; v += 5.0)
        {
            ok = ok && std::abs(nr.at(v).throughput_bps - nr0) <= 0.15 * nr0;
        }
        double worst_low = 0.0;
        for (double v = 0.0; v <= 30.0; v += 5.0)
        {
            worst_low = std::max(worst_low, std::abs(nr.at(v).throughput_bps - nr0) / nr0);
        }
        d << ", worst 0-30 deviation " << fmt("%.3f", worst_low) << ", nr loss";
        double prev = -1.0;
        for (const auto& [v, r] : nr)
        {
            if (v >= 30.0)
            {
                d << " " << fmt("%.0f", v) << ":" << fmt("%.4f", r.loss);
                ok = ok && r.loss > prev;
                prev = r.loss;
            }
        }
        const double lte_ratio = lte.at(60.0).throughput_bps / lte.at(0.0).throughput_bps;
        ok = ok && std::abs(lte_ratio - 1.0) <= 0.10;
        d << ", lte 60/0 " << fmt("%.4f", lte_ratio);
        report(6, ok, "mobility knee", d.str());
    }

    // 7. Propagation oracles.
    {
        RngStream rng("acceptance/friis", 2026);
        double worst = 0.0;
        double worst_doubling = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const double pt = rng.uniform(1e-3, 10.0);
            const double gt = rng.uniform(0.5, 500.0);
            const double gr = rng.uniform(0.5, 500.0);
            const double lambda = rng.uniform(1e-3, 0.5);
            const double d = rng.uniform(1.0, 5000.0);
            const double loss = rng.uniform(1.0, 10.0);
            const double ref = friis_ref(pt, gt, gr, lambda, d, loss);
            worst = std::max(worst, std::abs(friis_rx_power(pt, gt, gr, lambda, d, loss) - ref) / ref);
            const double doubling = friis_pathloss_db(lambda, 2.0 * d, loss) - friis_pathloss_db(lambda, d, loss);
            worst_doubling = std::max(worst_doubling, std::abs(doubling - 20.0 * std::log10(2.0)));
        }
        const double fspl = friis_pathloss_db(kSpeedOfLight / 2120e6, 100.0);
        const bool ok = worst <= 1e-12 && std::abs(fspl - 78.97) <= 0.01 && worst_doubling <= 1e-9;
        report(7, ok, "propagation oracles",
               "max rel err " + fmt("%.2e", worst) + ", FSPL(2120 MHz,100 m) " + fmt("%.4f dB", fspl) +
                   ", doubling err " + fmt("%.2e", worst_doubling));
    }

    // 8. Raster oracles, exact.
    {
        const double a = earfcn_to_freq_mhz(100, LinkDirection::Downlink);
        const double b = earfcn_to_freq_mhz(18100, LinkDirection::Uplink);
        const double c = nr_arfcn_to_freq_mhz(2054167);
        const double d = nr_arfcn_to_freq_mhz(2104165);
        const bool ok = a == 2120.0 && b == 1930.0 && c == 26500.08 && d == 29499.96;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%.2f %.2f %.2f %.2f MHz", a, b, c, d);
        report(8, ok, "frequency rasters", buf);
    }

    // 9. HARQ analytic match over 1e5 trials.
    {
        HarqProcess h;
        h.max_retx = 3;
        bool ok = true;
        std::ostringstream d;
        for (double p : {0.1, 0.3, 0.5})
        {
            const std::uint64_t trials = 100000;
            const double q = 1.0 - std::pow(p, 4);
            const double sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
            const double mc = harq_delivery_rate_parallel(p, h, trials, 2026, 4);
            const double z = (mc - q) / sigma;
            ok = ok && std::abs(z) <= 3.0 && mc == harq_delivery_rate_serial(p, h, trials, 2026);
            d << "p=" << p << " mc " << fmt("%.5f", mc) << " analytic " << fmt("%.5f", q) << " z " << fmt("%.2f", z)
              << "; ";
        }
        report(9, ok, "HARQ Monte Carlo vs 1-p^4", d.str());
    }

    // 10. Determinism across repeated runs and thread counts.
    {
        const auto dir = std::filesystem::temp_directory_path() / "sitesim_acceptance";
        std::filesystem::create_directories(dir);
        auto bytes = [](const std::filesystem::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        export_csv(s3.summaries, dir / "a.csv");
        export_csv(run_scenario_serial(c3).summaries, dir / "b.csv");
        bool ok = bytes(dir / "a.csv") == bytes(dir / "b.csv");
        std::string detail = std::string("scenario3 serial rerun ") + (ok ? "identical" : "differs");
        for (int threads : {2, 4})
        {
            SweepOptions o;
            o.threads = threads;
            export_csv(run_scenario_parallel(c3, o).summaries, dir / "p.csv");
            const bool same = bytes(dir / "a.csv") == bytes(dir / "p.csv");
            detail += ", " + std::to_string(threads) + " threads " + (same ? "identical" : "differs");
            ok = ok && same;
        }
        SweepOptions o;
        o.threads = 3;
        const bool s1_same = render_csv(run_scenario_parallel(c1, o).summaries) == render_csv(s1.summaries);
        detail += std::string(", scenario1 3 threads ") + (s1_same ? "identical" : "differs");
        report(10, ok && s1_same, "byte-identical CSV", detail);
    }

    // 11. Conservation per flow over every run above.
    {
        std::size_t flows = 0;
        std::size_t bad = 0;
        std::uint64_t packets = 0;
        for (const SweepOutput* out : {&s1, &s2, &s3})
        {
            for (const auto& r : out->runs)
            {
                for (const auto& f : r.lifetime)
                {
                    ++flows;
                    packets += f.tx_packets;
                    const std::uint64_t fates = f.rx_packets + f.drops(DropCause::QueueOverflow) +
                                                f.drops(DropCause::HarqExhausted) +
                                                f.drops(DropCause::OutOfCoverage);
                    bad += (f.tx_packets != fates || f.in_flight != 0) ? 1 : 0;
                }
            }
        }
        report(11, bad == 0, "created = delivered + dropped per flow",
               std::to_string(flows) + " flows, " + std::to_string(packets) + " packets, " + std::to_string(bad) +
                   " violations");
    }

    std::printf("# %d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
