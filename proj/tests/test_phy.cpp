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

#include "sitesim/harq.hpp"
#include "sitesim/link_adaptation.hpp"
#include "sitesim/numerology.hpp"
#include "sitesim/rng_stream.hpp"
#include "sitesim/scheduler.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace sitesim;

TEST_CASE("slot duration is inversely proportional to sub-carrier spacing")
{
    CHECK(slot_duration_s(15) == 0.001);
    CHECK(slot_duration_s(30) == 0.0005);
    CHECK(slot_duration_s(120) == 0.000125);
    for (int scs : {15, 30, 60, 120})
    {
        CHECK(slot_duration_s(scs) * scs == doctest::Approx(0.015));
        CHECK(Numerology::from_scs(scs).symbols_per_slot == 14);
    }
    CHECK_THROWS_AS(slot_duration_s(45), std::invalid_argument);
    CHECK_THROWS_AS(Numerology::from_scs(240), std::invalid_argument);
}

TEST_CASE("truncated Shannon rate")
{
    const LinkAdaptation unit{1.0, 10.0, -10.0};
    CHECK(achievable_rate_bps(0.0, 1e6, unit) == doctest::Approx(1e6).epsilon(1e-12));

    const LinkAdaptation lte{0.75, 4.5, -5.0};
    CHECK(achievable_rate_bps(60.0, 5e6, lte) == doctest::Approx(16.875e6).epsilon(1e-12));
    CHECK(achievable_rate_bps(-5.01, 5e6, lte) == 0.0);
    CHECK(achievable_rate_bps(-5.0, 5e6, lte) > 0.0);

    RngStream rng("test/la", 4);
    double prev_snr = -5.0;
    for (int i = 0; i < 500; ++i)
    {
        const double snr = prev_snr + rng.uniform(0.0, 0.2);
        REQUIRE(achievable_rate_bps(snr, 5e6, lte) >= achievable_rate_bps(prev_snr, 5e6, lte));
        const double bw = rng.uniform(1e5, 1e9);
        REQUIRE(achievable_rate_bps(snr, 3.0 * bw, lte) == doctest::Approx(3.0 * achievable_rate_bps(snr, bw, lte)));
        prev_snr = snr;
    }
}

TEST_CASE("link adaptation invariants")
{
    CHECK_THROWS_AS((LinkAdaptation{0.0, 4.5, -5.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LinkAdaptation{1.1, 4.5, -5.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LinkAdaptation{0.7, 0.0, -5.0}.validate()), std::invalid_argument);
}

TEST_CASE("BLER logistic")
{
    CHECK(bler(3.0, 3.0, 1.0) == 0.5);
    CHECK(bler(13.0, 3.0, 1.0) == doctest::Approx(4.5398e-5).epsilon(1e-4));
    CHECK(bler(13.0, 3.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::exp(10.0))));
    CHECK_THROWS_AS(bler(0.0, 3.0, 0.0), std::invalid_argument);
    double prev = 1.0;
    for (double s = -20.0; s <= 30.0; s += 0.1)
    {
        const double b = bler(s, BlerModel{});
        REQUIRE(b <= prev);
        prev = b;
    }
}

TEST_CASE("PF scheduler")
{
    SUBCASE("single backlogged UE takes every RB")
    {
        SchedulerState s(3, 100);
        s.backlog_bytes = {0.0, 1e6, 0.0};
        const auto g = pf_schedule(s, std::vector<double>{1e5, 1e5, 1e5}, 25, 1e-3);
        CHECK(g == std::vector<int>{0, 25, 0});
    }
    SUBCASE("argmax of rate over average")
    {
        SchedulerState s(2, 100);
        s.avg_rate_bps = {1.0, 2.0};
        s.backlog_bytes = {1e6, 1e6};
        CHECK(pf_schedule(s, std::vector<double>{10.0, 10.0}, 1, 1e-3) == std::vector<int>{1, 0});
    }
    SUBCASE("ties go to the lowest index")
    {
        SchedulerState s(3, 100);
        s.backlog_bytes = {1e6, 1e6, 1e6};
        CHECK(pf_schedule(s, std::vector<double>{5.0, 5.0, 5.0}, 1, 1e-3) == std::vector<int>{1, 0, 0});
    }
    SUBCASE("no backlog gives an empty allocation")
    {
        SchedulerState s(2, 100);
        CHECK(pf_schedule(s, std::vector<double>{5.0, 5.0}, 10, 1e-3) == std::vector<int>{0, 0});
    }
    SUBCASE("a UE leaves contention once its backlog is covered")
    {
        SchedulerState s(2, 100);
        s.backlog_bytes = {100.0, 1e6};
        // 80 kb/s per RB over 1 ms is 10 bytes per RB.
        const auto g = pf_schedule(s, std::vector<double>{80e3, 80e3}, 25, 1e-3);
        CHECK(g[0] == 10);
        CHECK(g[1] == 15);
    }
    SUBCASE("smoothing update")
    {
        SchedulerState s(1, 100);
        s.backlog_bytes = {1e9};
        pf_schedule(s, std::vector<double>{1e6}, 10, 1e-3);
        // served = 10 RB * 1 Mb/s
        CHECK(s.avg_rate_bps[0] == doctest::Approx(0.99 * kPfInitialAverageBps + 0.01 * 10e6));
    }
    CHECK_THROWS_AS(SchedulerState(2, 0), std::invalid_argument);
}

TEST_CASE("property: PF allocation is scale invariant and within the RB budget")
{
    RngStream rng("test/pf", 12);
    for (int round = 0; round < 300; ++round)
    {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0.0, 8.0));
        SchedulerState a(n, 100);
        std::vector<double> rates(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            a.avg_rate_bps[i] = rng.uniform(1e3, 1e7);
            a.backlog_bytes[i] = rng.uniform(0.0, 3.0) < 1.0 ? 0.0 : rng.uniform(1.0, 5e3);
            rates[i] = rng.uniform(1e4, 1e6);
        }
        SchedulerState b = a;
        const double c = rng.uniform(0.01, 100.0);
        for (double& t : b.avg_rate_bps)
        {
            t *= c;
        }
        const int rbs = 1 + static_cast<int>(rng.uniform(0.0, 50.0));
        const auto ga = pf_schedule(a, rates, rbs, 1e-3);
        const auto gb = pf_schedule(b, rates, rbs, 1e-3);
        REQUIRE(ga == gb);
        REQUIRE(std::accumulate(ga.begin(), ga.end(), 0) <= rbs);
        for (std::size_t i = 0; i < n; ++i)
        {
            REQUIRE(a.avg_rate_bps[i] > 0.0);
            if (b.backlog_bytes[i] == 0.0)
            {
                REQUIRE(ga[i] == 0);
            }
        }
    }
}

TEST_CASE("round robin")
{
    SUBCASE("three backlogged UEs over six slots")
    {
        SchedulerState s(3, 100);
        s.backlog_bytes = {1.0, 1.0, 1.0};
        RoundRobinScheduler rr;
        std::vector<int> served(3, 0);
        for (std::uint64_t k = 0; k < 6; ++k)
        {
            ++served[*rr.next(s, k)];
        }
        CHECK(served == std::vector<int>{2, 2, 2});
    }
    SUBCASE("one UE is served every slot")
    {
        SchedulerState s(4, 100);
        s.backlog_bytes = {0.0, 0.0, 1.0, 0.0};
        RoundRobinScheduler rr;
        for (std::uint64_t k = 0; k < 5; ++k)
        {
            CHECK(rr.next(s, k) == 2u);
        }
    }
    SUBCASE("idle slot without backlog")
    {
        SchedulerState s(2, 100);
        RoundRobinScheduler rr;
        CHECK_FALSE(rr.next(s, 0).has_value());
    }
    SUBCASE("late arrival joins after the current position without starvation")
    {
        SchedulerState s(4, 100);
        s.backlog_bytes = {1.0, 0.0, 1.0, 0.0};
        RoundRobinScheduler rr;
        CHECK(rr.next(s, 0) == 0u);
        s.backlog_bytes[1] = 1.0; // UE1 wakes up mid-rotation
        CHECK(rr.next(s, 1) == 1u);
        CHECK(rr.next(s, 2) == 2u);
        CHECK(rr.next(s, 3) == 0u);
    }
    SUBCASE("property: every backlogged UE is served within N slots")
    {
        RngStream rng("test/rr", 5);
        for (int round = 0; round < 100; ++round)
        {
            const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0.0, 10.0));
            SchedulerState s(n, 100);
            RoundRobinScheduler rr;
            std::vector<std::uint64_t> last(n, 0);
            for (std::uint64_t k = 1; k <= 200; ++k)
            {
                for (std::size_t i = 0; i < n; ++i)
                {
                    s.backlog_bytes[i] = 1.0;
                }
                const auto ue = rr.next(s, k);
                REQUIRE(ue.has_value());
                last[*ue] = k;
                if (k > n)
                {
                    for (std::size_t i = 0; i < n; ++i)
                    {
                        REQUIRE(k - last[i] < n);
                    }
                }
            }
        }
    }
}

TEST_CASE("HARQ edge regimes")
{
    HarqProcess h;
    RngStream rng("test/harq", 1);
    const auto good = harq_transmit(80.0, h, BlerModel{}, rng);
    CHECK(good.delivered);
    CHECK(good.transmissions == 1);
    CHECK(good.added_delay_s == 0.0);

    Packet p;
    const auto bad = harq_transmit(p, -1e9, h, BlerModel{}, rng);
    CHECK_FALSE(bad.delivered);
    CHECK(bad.transmissions == 4);
    CHECK(bad.added_delay_s == doctest::Approx(3 * 8e-3));
    CHECK(p.attempts == 4);
    CHECK(p.drop_cause == DropCause::HarqExhausted);
}

TEST_CASE("HARQ applies chase-combining gain per retransmission")
{
    HarqProcess h{3, 2.0, 1e-3};
    std::vector<double> seen;
    RngStream rng("test/harq-seq", 1);
    harq_attempts(
        h,
        [&](int k) {
            seen.push_back(1.0 + (k - 1) * h.combining_gain_db);
            return 1.0;
        },
        rng);
    CHECK(seen == std::vector<double>{1.0, 3.0, 5.0, 7.0});

    // Delivered on attempt k adds (k-1) round trips.
    int calls = 0;
    const auto out = harq_attempts(h, [&](int k) { ++calls; return k < 3 ? 1.0 : 0.0; }, rng);
    CHECK(out.delivered);
    CHECK(out.transmissions == 3);
    CHECK(out.added_delay_s == doctest::Approx(2e-3));
}

TEST_CASE("HARQ closed forms")
{
    CHECK(harq_delivery_probability(0.5, 3) == 0.9375);
    CHECK(harq_delivery_probability(0.0, 3) == 1.0);
    for (double p : {0.05, 0.1, 0.3, 0.5, 0.9})
    {
        // Truncated geometric series summed term by term.
        double expected = 0.0;
        for (int k = 1; k <= 4; ++k)
        {
            const double reach = std::pow(p, k - 1);
            expected += reach;
        }
        CHECK(harq_expected_transmissions(p, 3) == doctest::Approx(expected));
        CHECK(harq_expected_transmissions(p, 3) == doctest::Approx((1.0 - std::pow(p, 4)) / (1.0 - p)));
    }
}

TEST_CASE("HARQ Monte Carlo agrees with the closed form")
{
    HarqProcess h;
    const std::uint64_t trials = 100000;
    for (double p : {0.1, 0.3, 0.5})
    {
        const double q = harq_delivery_probability(p, h.max_retx);
        const double sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
        const double serial = harq_delivery_rate_serial(p, h, trials, 99);
        CHECK(std::abs(serial - q) <= 3.0 * sigma);
        for (int threads : {1, 2, 4})
        {
            CHECK(harq_delivery_rate_parallel(p, h, trials, 99, threads) == serial);
        }

        // Mean transmissions per packet against the closed form.
        RngStream rng("test/harq-mean", 3);
        double total = 0.0;
        const int n = 50000;
        for (int i = 0; i < n; ++i)
        {
            total += harq_attempts(h, [p](int) { return p; }, rng).transmissions;
        }
        CHECK(total / n == doctest::Approx(harq_expected_transmissions(p, h.max_retx)).epsilon(0.02));
    }
}
