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

#ifndef SITESIM_HARQ_HPP
#define SITESIM_HARQ_HPP

#include "sitesim/link_adaptation.hpp"
#include "sitesim/rng_stream.hpp"
#include "sitesim/traffic.hpp"

#include <cstdint>

namespace sitesim
{

struct HarqProcess
{
    int max_retx = 3;
    double combining_gain_db = 2.0; // per retransmission, chase combining
    double rtt_s = 8e-3;

    void validate() const;
};

struct HarqOutcome
{
    bool delivered = false;
    int transmissions = 0;
    /// Delivered: (k - 1) * rtt. Dropped: max_retx * rtt, i.e. the time at
    /// which the last attempt is known to have failed.
    double added_delay_s = 0.0;
};

/// Runs attempts k = 1 .. 1 + max_retx; attempt k fails with probability
/// error_for_attempt(k). One uniform draw per attempt.
template <typename ErrorFn>
HarqOutcome
harq_attempts(const HarqProcess& h, ErrorFn&& error_for_attempt, RngStream& rng)
{
    HarqOutcome out;
    const int limit = 1 + h.max_retx;
    for (int k = 1; k <= limit; ++k)
    {
        out.transmissions = k;
        if (rng.uniform() >= error_for_attempt(k))
        {
            out.delivered = true;
            out.added_delay_s = (k - 1) * h.rtt_s;
            return out;
        }
    }
    out.added_delay_s = h.max_retx * h.rtt_s;
    return out;
}

/// Attempt k sees snr + (k - 1) * combining_gain through the BLER curve.
HarqOutcome harq_transmit(double snr_db, const HarqProcess& h, const BlerModel& bler_model, RngStream& rng);

/// Same, recording the attempt count and drop cause on the packet.
HarqOutcome harq_transmit(Packet& pkt, double snr_db, const HarqProcess& h, const BlerModel& bler_model, RngStream& rng);

/// Closed-form delivery probability for a constant per-attempt error p.
double harq_delivery_probability(double p, int max_retx);
/// Closed-form expected number of transmissions, (1 - p^(K+1)) / (1 - p).
double harq_expected_transmissions(double p, int max_retx);

/// Monte Carlo delivery rate with constant per-attempt error p.
///
/// Trials are split into a fixed number of blocks, each with its own named
/// substream, so the serial reference and the OpenMP kernel return the same
/// value for any thread count.
double harq_delivery_rate_serial(double p, const HarqProcess& h, std::uint64_t trials, std::uint64_t seed);
double harq_delivery_rate_parallel(double p, const HarqProcess& h, std::uint64_t trials, std::uint64_t seed, int threads);

} // namespace sitesim

#endif // SITESIM_HARQ_HPP
