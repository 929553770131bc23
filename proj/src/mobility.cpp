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

#include "sitesim/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace sitesim
{

double
norm(Vec2 v)
{
    return std::hypot(v.x, v.y);
}

double
distance_m(Vec2 a, Vec2 b)
{
    return norm(a - b);
}

void
MobilityState::validate() const
{
    if (!(min_r >= 1.0))
    {
        throw std::invalid_argument("corridor minimum radius must be >= 1 m");
    }
    if (!(max_r >= min_r))
    {
        throw std::invalid_argument("corridor maximum radius must be >= minimum radius");
    }
    const double r0 = norm(position);
    const double slack = 1e-9 * max_r;
    if (r0 < min_r - slack || r0 > max_r + slack)
    {
        throw std::invalid_argument("start position lies outside the corridor");
    }
    // Cross product of position and velocity must vanish for radial motion.
    const double cross = position.x * velocity.y - position.y * velocity.x;
    if (std::abs(cross) > 1e-9 * (r0 * norm(velocity) + 1.0))
    {
        throw std::invalid_argument("velocity must be radial");
    }
}

MobilityState
MobilityState::radial(double angle_rad, double r0, double speed_mps, double min_r, double max_r)
{
    const Vec2 dir{std::cos(angle_rad), std::sin(angle_rad)};
    MobilityState s{r0 * dir, speed_mps * dir, min_r, max_r};
    s.validate();
    return s;
}

Vec2
position_at(const MobilityState& state, double t)
{
    if (t < 0.0)
    {
        throw std::invalid_argument("position_at requires t >= 0");
    }
    const double r0 = norm(state.position);
    if (state.velocity == Vec2{} || r0 == 0.0)
    {
        return state.position;
    }
    const Vec2 dir = (1.0 / r0) * state.position;
    const double v_r = state.velocity.x * dir.x + state.velocity.y * dir.y;
    const double span = state.max_r - state.min_r;
    if (span <= 0.0)
    {
        return state.min_r * dir;
    }
    // Unfold the corridor into a line of period 2 * span and fold back.
    const double period = 2.0 * span;
    double u = std::fmod(r0 + v_r * t - state.min_r, period);
    if (u < 0.0)
    {
        u += period;
    }
    const double r = state.min_r + (u <= span ? u : period - u);
    return r * dir;
}

} // namespace sitesim
