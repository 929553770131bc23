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

#include "sitesim/link_adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sitesim
{

void
LinkAdaptation::validate() const
{
    if (!(overhead > 0.0 && overhead <= 1.0))
    {
        throw std::invalid_argument("la_overhead must be in (0, 1]");
    }
    if (!(eff_max > 0.0))
    {
        throw std::invalid_argument("la_eff_max must be positive");
    }
}

double
achievable_rate_bps(double snr_db, double bandwidth_hz, const LinkAdaptation& la)
{
    if (!(bandwidth_hz > 0.0))
    {
        throw std::invalid_argument("bandwidth must be positive");
    }
    if (snr_db < la.snr_floor_db)
    {
        return 0.0;
    }
    const double efficiency = std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
    return bandwidth_hz * la.overhead * std::min(efficiency, la.eff_max);
}

void
BlerModel::validate() const
{
    if (!(steepness_db > 0.0))
    {
        throw std::invalid_argument("bler_steepness_db must be positive");
    }
}

double
bler(double snr_db, double threshold_db, double steepness_db)
{
    if (!(steepness_db > 0.0))
    {
        throw std::invalid_argument("BLER steepness must be positive");
    }
    return 1.0 / (1.0 + std::exp((snr_db - threshold_db) / steepness_db));
}

} // namespace sitesim
