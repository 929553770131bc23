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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sitesim
{

namespace
{

constexpr std::uint64_t kMonteCarloBlocks = 64;

std::uint64_t
delivered_in_block(double p, const HarqProcess& h, std::uint64_t total_trials, std::uint64_t block, std::uint64_t seed)
{
    // Block sizes differ by at most one trial.
    const std::uint64_t base = total_trials / kMonteCarloBlocks;
    const std::uint64_t n = base + (block < total_trials % kMonteCarloBlocks ? 1 : 0);
    RngStream rng("harq-mc/" + std::to_string(block), seed);
    std::uint64_t delivered = 0;
    for (std::uint64_t i = 0; i < n; ++i)
    {
        if (harq_attempts(h, [p](int) { return p; }, rng).delivered)
        {
            ++delivered;
        }
    }
    return delivered;
}

} // namespace

void
HarqProcess::validate() const
{
    if (max_retx < 0)
    {
        throw std::invalid_argument("harq_max_retx must be >= 0");
    }
    if (!(rtt_s > 0.0))
    {
        throw std::invalid_argument("harq_rtt_ms must be positive");
    }
}

HarqOutcome
harq_transmit(double snr_db, const HarqProcess& h, const BlerModel& bler_model, RngStream& rng)
{
    return harq_attempts(
        h,
        [&](int k) { return bler(snr_db + (k - 1) * h.combining_gain_db, bler_model); },
        rng);
}

HarqOutcome
harq_transmit(Packet& pkt, double snr_db, const HarqProcess& h, const BlerModel& bler_model, RngStream& rng)
{
    const HarqOutcome out = harq_transmit(snr_db, h, bler_model, rng);
    pkt.attempts = out.transmissions;
    pkt.drop_cause = out.delivered ? DropCause::None : DropCause::HarqExhausted;
    return out;
}

double
harq_delivery_probability(double p, int max_retx)
{
    return 1.0 - std::pow(p, max_retx + 1);
}

double
harq_expected_transmissions(double p, int max_retx)
{
    if (p >= 1.0)
    {
        return max_retx + 1.0;
    }
    return (1.0 - std::pow(p, max_retx + 1)) / (1.0 - p);
}

double
harq_delivery_rate_serial(double p, const HarqProcess& h, std::uint64_t trials, std::uint64_t seed)
{
    if (trials == 0)
    {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    std::uint64_t delivered = 0;
    for (std::uint64_t b = 0; b < kMonteCarloBlocks; ++b)
    {
        delivered += delivered_in_block(p, h, trials, b, seed);
    }
    return static_cast<double>(delivered) / static_cast<double>(trials);
}

double
harq_delivery_rate_parallel(double p, const HarqProcess& h, std::uint64_t trials, std::uint64_t seed, int threads)
{
    if (trials == 0)
    {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    std::vector<std::uint64_t> per_block(kMonteCarloBlocks, 0);
    const auto blocks = static_cast<std::int64_t>(kMonteCarloBlocks);
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
    for (std::int64_t b = 0; b < blocks; ++b)
    {
        per_block[b] = delivered_in_block(p, h, trials, static_cast<std::uint64_t>(b), seed);
    }
    std::uint64_t delivered = 0;
    for (auto d : per_block)
    {
        delivered += d;
    }
    return static_cast<double>(delivered) / static_cast<double>(trials);
}

} // namespace sitesim
