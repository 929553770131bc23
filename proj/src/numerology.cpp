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

#include "sitesim/numerology.hpp"

#include <stdexcept>
#include <string>

namespace sitesim
{

bool
is_supported_scs(int scs_khz)
{
    return scs_khz == 15 || scs_khz == 30 || scs_khz == 60 || scs_khz == 120;
}

double
slot_duration_s(int scs_khz)
{
    if (!is_supported_scs(scs_khz))
    {
        throw std::invalid_argument("unsupported sub-carrier spacing " + std::to_string(scs_khz) +
                                    " kHz (expected 15, 30, 60 or 120)");
    }
    return 0.001 * 15.0 / static_cast<double>(scs_khz);
}

Numerology
Numerology::from_scs(int scs_khz)
{
    return Numerology{scs_khz, sitesim::slot_duration_s(scs_khz), 14};
}

} // namespace sitesim
