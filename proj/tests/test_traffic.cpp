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

#include "sitesim/rng_stream.hpp"
#include "sitesim/traffic.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace sitesim;

namespace
{

VideoStream
stream(double rate_bps, double start, double stop)
{
    VideoStream s;
    s.rate_bps = rate_bps;
    s.start_s = start;
    s.stop_s = stop;
    return s;
}

Packet
packet(std::int64_t seq, int size = 1250)
{
    Packet p;
    p.seq = seq;
    p.size_bytes = size;
    return p;
}

} // namespace

TEST_CASE("CBR emission at 2 Mb/s")
{
    const auto t = cbr_emit_times(stream(2e6, 0.0, 1.0));
    REQUIRE(t.size() == 200);
    CHECK(t.front() == 0.0);
    CHECK(t[1] - t[0] == doctest::Approx(0.005));
    CHECK(t.back() < 1.0);
}

TEST_CASE("CBR emission at 8 Mb/s")
{
    const auto t = cbr_emit_times(stream(8e6, 2.0, 3.0));
    CHECK(t.front() == 2.0);
    CHECK(t[1] - t[0] == doctest::Approx(0.00125));
    CHECK(t.size() == 800);
}

TEST_CASE("empty and invalid streams")
{
    CHECK(cbr_emit_times(stream(2e6, 1.0, 1.0)).empty());
    CHECK_THROWS_AS(stream(0.0, 0.0, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(stream(2e6, 2.0, 1.0).validate(), std::invalid_argument);
    VideoStream big = stream(2e6, 0.0, 1.0);
    big.packet_size_bytes = 1501;
    CHECK_THROWS_AS(big.validate(), std::invalid_argument);
}

TEST_CASE("property: packet count over a window is floor(duration * pps) +- 1")
{
    RngStream rng("test/cbr", 21);
    for (int i = 0; i < 300; ++i)
    {
        const double rate = rng.uniform(1e5, 1e7);
        const double a = rng.uniform(0.0, 5.0);
        const double b = a + rng.uniform(0.0, 3.0);
        const auto t = cbr_emit_times(stream(rate, a, b));
        const double expected = std::floor((b - a) * rate / (8.0 * 1250.0));
        REQUIRE(std::abs(static_cast<double>(t.size()) - expected) <= 1.0);
        for (std::size_t k = 1; k < t.size(); ++k)
        {
            REQUIRE(t[k] > t[k - 1]);
        }
    }
}

TEST_CASE("source numbers packets consecutively")
{
    CbrSource src(stream(2e6, 0.0, 0.02));
    std::int64_t expect = 0;
    while (src.peek())
    {
        const Packet p = src.emit();
        CHECK(p.seq == expect++);
        CHECK(p.size_bytes == 1250);
    }
    CHECK(expect == 4);
}

TEST_CASE("drop-tail queue")
{
    FlowQueue q(100);
    Packet p = packet(0);
    CHECK(q.enqueue(p) == EnqueueResult::Accepted);
    for (int i = 1; i < 100; ++i)
    {
        Packet x = packet(i);
        REQUIRE(q.enqueue(x) == EnqueueResult::Accepted);
    }
    Packet overflow = packet(100);
    CHECK(q.enqueue(overflow) == EnqueueResult::Dropped);
    CHECK(overflow.drop_cause == DropCause::QueueOverflow);
    CHECK(q.size() == 100);
}

TEST_CASE("serve splits packets across grants")
{
    FlowQueue q(10);
    for (int i = 0; i < 3; ++i)
    {
        Packet p = packet(i, 1000);
        q.enqueue(p);
    }
    CHECK(q.backlog_bytes() == 3000.0);
    CHECK(q.serve(600.0).empty());
    CHECK(q.backlog_bytes() == 2400.0);
    auto done = q.serve(1300.0);
    REQUIRE(done.size() == 1);
    CHECK(done[0].seq == 0);
    CHECK(q.backlog_bytes() == 1100.0);
    done = q.serve(1e6);
    REQUIRE(done.size() == 2);
    CHECK(done[1].seq == 2);
    CHECK(q.empty());
    CHECK(q.backlog_bytes() == 0.0);
}

TEST_CASE("overload drop fraction follows flow conservation")
{
    // 40 Mb/s offered into a 17 Mb/s drain, simulated at 1 ms granularity.
    FlowQueue q(100);
    const double offered = 40e6;
    const double service = 17e6;
    std::uint64_t created = 0;
    std::uint64_t dropped = 0;
    double credit = 0.0;
    for (int ms = 0; ms < 20000; ++ms)
    {
        credit += offered * 1e-3 / 8.0;
        while (credit >= 1250.0)
        {
            credit -= 1250.0;
            Packet p = packet(static_cast<std::int64_t>(created++));
            dropped += q.enqueue(p) == EnqueueResult::Dropped;
        }
        q.serve(service * 1e-3 / 8.0);
    }
    CHECK(dropped / double(created) == doctest::Approx(1.0 - 17.0 / 40.0).epsilon(0.01));
}
