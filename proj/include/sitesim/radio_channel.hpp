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

#ifndef SITESIM_RADIO_CHANNEL_HPP
#define SITESIM_RADIO_CHANNEL_HPP

#include "sitesim/rng_stream.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sitesim
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

enum class Rat : std::uint8_t
{
    Lte,
    NrMmWave,
};

std::string_view to_string(Rat rat);
/// Accepts "lte" and "nr".
std::optional<Rat> parse_rat(std::string_view text);

enum class LinkDirection : std::uint8_t
{
    Downlink,
    Uplink,
};

/// Physical parameters of one radio access technology, as seen by the link
/// that carries the video (UE transmitter, base-station receiver).
struct RadioConfig
{
    Rat rat = Rat::Lte;
    double carrier_freq_hz = 0.0;
    double bandwidth_hz = 0.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double system_loss = 1.0; // linear, >= 1
    double noise_figure_db = 0.0;
    double max_range_m = 0.0; // coverage radius

    double wavelength_m() const { return kSpeedOfLight / carrier_freq_hz; }
    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;
};

/// Close-in LOS model: PL = alpha + 10 beta log10(d / 1 m) + shadowing.
struct MmWavePathLossParams
{
    double alpha_db = 61.4;
    double beta = 2.0;
    double sigma_db = 5.8;
    double max_range_m = 200.0;

    void validate() const;
};

/// Empirical mobility degradation. NR suffers beam-tracking outages whose
/// probability follows a logistic curve in speed; LTE degrades linearly.
struct VelocityModel
{
    double v_mid_kmh = 45.0;
    double s_v_kmh = 4.0;
    double outage_loss_db = 30.0;
    double lte_slope_db_per_kmh = 0.02;

    void validate() const;
};

struct ChannelSample
{
    double distance_m = 0.0;
    double pathloss_db = 0.0;
    double rx_power_dbm = 0.0;
    double noise_dbm = 0.0;
    double penalties_db = 0.0;
    double snr_db = 0.0;
};

// -- frequency rasters ----------------------------------------------------

/// E-UTRA band 1 raster; throws std::out_of_range for channels outside band 1.
double earfcn_to_freq_mhz(std::int64_t earfcn, LinkDirection direction);
/// Direction implied by the channel number (0-599 downlink, 18000-18599 uplink).
std::optional<LinkDirection> earfcn_direction(std::int64_t earfcn);
/// NR global raster, 60 kHz segment (N >= 2016667).
double nr_arfcn_to_freq_mhz(std::int64_t nr_arfcn);

// -- propagation ----------------------------------------------------------

/// Friis free-space received power in watts. Throws for d <= 0, loss < 1 or
/// non-positive gains.
double friis_rx_power(double tx_power_w, double gt, double gr, double lambda_m, double d_m, double loss);

/// Friis path loss in dB (unit gains), including the system loss L.
double friis_pathloss_db(double lambda_m, double d_m, double loss = 1.0);

/// Returns std::nullopt when d exceeds params.max_range_m (out of coverage).
/// Throws std::invalid_argument for d < 1 m.
std::optional<double> mmwave_pathloss_db(double d_m, const MmWavePathLossParams& params, double shadow_db);

double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

/// Link budget at distance d. LTE uses Friis (shadowing ignored), NR the
/// mmWave LOS model. std::nullopt means the receiver is out of coverage.
std::optional<ChannelSample> snr_db(const RadioConfig& cfg,
                                    const MmWavePathLossParams& mmwave,
                                    double d_m,
                                    double penalties_db,
                                    double shadow_db);

// -- mobility degradation -------------------------------------------------

/// Probability that an NR beam is lost during one refresh period at speed v.
double nr_outage_probability(double v_kmh, const VelocityModel& model);

/// Penalty for one scheduling period. NR draws one uniform from rng to decide
/// the outage; LTE is deterministic and consumes no draws. The period index
/// is carried for tracing only.
double velocity_penalty_db(Rat rat, double v_kmh, const VelocityModel& model, RngStream& rng, std::uint64_t period);

inline double
db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

inline double
linear_to_db(double x)
{
    return 10.0 * std::log10(x);
}

} // namespace sitesim

#endif // SITESIM_RADIO_CHANNEL_HPP
