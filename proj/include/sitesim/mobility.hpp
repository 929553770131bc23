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

#ifndef SITESIM_MOBILITY_HPP
#define SITESIM_MOBILITY_HPP

namespace sitesim
{

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

double norm(Vec2 v);
double distance_m(Vec2 a, Vec2 b);

inline double
kmh_to_mps(double v_kmh)
{
    return v_kmh / 3.6;
}

/// A UE moving along a radial corridor around the base station (origin).
///
/// The machine drives along the ray through its start position and turns
/// around at the corridor ends, so its radius follows a triangle wave between
/// min_r and max_r.
struct MobilityState
{
    Vec2 position;  // at t = 0
    Vec2 velocity;  // m/s, parallel to position
    double min_r = 1.0;
    double max_r = 200.0;

    /// Throws std::invalid_argument when bounds are inconsistent, the start is
    /// outside the corridor, or the velocity has a tangential component.
    void validate() const;

    double speed_mps() const { return norm(velocity); }

    /// Start at radius r0 on the ray at angle_rad, moving outward at speed.
    static MobilityState radial(double angle_rad, double r0, double speed_mps, double min_r, double max_r);
};

Vec2 position_at(const MobilityState& state, double t);

} // namespace sitesim

#endif // SITESIM_MOBILITY_HPP
