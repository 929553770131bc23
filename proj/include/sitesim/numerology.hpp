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

#ifndef SITESIM_NUMEROLOGY_HPP
#define SITESIM_NUMEROLOGY_HPP

namespace sitesim
{

/// OFDM numerology: slot length scales as 15 kHz / SCS milliseconds.
struct Numerology
{
    int scs_khz = 15;
    double slot_duration_s = 1e-3;
    int symbols_per_slot = 14;

    /// Throws std::invalid_argument for spacings other than 15/30/60/120 kHz.
    static Numerology from_scs(int scs_khz);
};

double slot_duration_s(int scs_khz);
bool is_supported_scs(int scs_khz);

} // namespace sitesim

#endif // SITESIM_NUMEROLOGY_HPP
