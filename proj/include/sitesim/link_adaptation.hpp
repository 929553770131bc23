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

#ifndef SITESIM_LINK_ADAPTATION_HPP
#define SITESIM_LINK_ADAPTATION_HPP

namespace sitesim
{

/// Truncated-Shannon link abstraction.
struct LinkAdaptation
{
    double overhead = 0.75;     // fraction of raw capacity left after control/reference overhead
    double eff_max = 4.5;       // b/s/Hz ceiling of the highest MCS
    double snr_floor_db = -5.0; // below this no MCS is usable

    void validate() const;
};

/// bandwidth * overhead * min(log2(1 + snr), eff_max), or 0 below the floor.
double achievable_rate_bps(double snr_db, double bandwidth_hz, const LinkAdaptation& la);

/// Logistic block error curve.
struct BlerModel
{
    double threshold_db = 3.0;
    double steepness_db = 1.0;

    void validate() const;
};

/// 1 / (1 + exp((snr - threshold) / steepness)).
double bler(double snr_db, double threshold_db, double steepness_db);

inline double
bler(double snr_db, const BlerModel& m)
{
    return bler(snr_db, m.threshold_db, m.steepness_db);
}

} // namespace sitesim

#endif // SITESIM_LINK_ADAPTATION_HPP
