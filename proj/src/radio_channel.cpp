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

#include "sitesim/radio_channel.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sitesim
{

namespace
{

// Band 1 raster constants, frequencies in 100 kHz units.
constexpr std::int64_t kBand1DlLow = 21100;
constexpr std::int64_t kBand1DlOffset = 0;
constexpr std::int64_t kBand1DlLast = 599;
constexpr std::int64_t kBand1UlLow = 19200;
constexpr std::int64_t kBand1UlOffset = 18000;
constexpr std::int64_t kBand1UlLast = 18599;

// NR global raster, 60 kHz step region; frequencies in kHz.
constexpr std::int64_t kNrSegmentStart = 2016667;
constexpr std::int64_t kNrSegmentLast = 3279165;
constexpr std::int64_t kNrSegmentBaseKhz = 24250080;
constexpr std::int64_t kNrStepKhz = 60;

void
require(bool ok, const char* what)
{
    if (!ok)
    {
        throw std::invalid_argument(what);
    }
}

} // namespace

std::string_view
to_string(Rat rat)
{
    return rat == Rat::Lte ? "lte" : "nr";
}

std::optional<Rat>
parse_rat(std::string_view text)
{
    if (text == "lte")
    {
        return Rat::Lte;
    }
    if (text == "nr")
    {
        return Rat::NrMmWave;
    }
    return std::nullopt;
}

void
RadioConfig::validate() const
{
    require(carrier_freq_hz > 0.0, "carrier_freq must be positive");
    require(bandwidth_hz > 0.0, "bandwidth must be positive");
    require(system_loss >= 1.0, "system_loss must be >= 1");
    require(max_range_m > 0.0, "max_range_m must be positive");
}

void
MmWavePathLossParams::validate() const
{
    require(beta > 0.0, "mmwave_beta must be positive");
    require(sigma_db >= 0.0, "mmwave_sigma must be non-negative");
    require(max_range_m > 0.0, "max_range_m must be positive");
}

void
VelocityModel::validate() const
{
    require(s_v_kmh > 0.0, "s_v_kmh must be positive");
    require(outage_loss_db >= 0.0, "outage_loss_db must be non-negative");
    require(lte_slope_db_per_kmh >= 0.0, "velocity_slope_db_per_kmh must be non-negative");
}

std::optional<LinkDirection>
earfcn_direction(std::int64_t earfcn)
{
    if (earfcn >= kBand1DlOffset && earfcn <= kBand1DlLast)
    {
        return LinkDirection::Downlink;
    }
    if (earfcn >= kBand1UlOffset && earfcn <= kBand1UlLast)
    {
        return LinkDirection::Uplink;
    }
    return std::nullopt;
}

double
earfcn_to_freq_mhz(std::int64_t earfcn, LinkDirection direction)
{
    const bool dl = direction == LinkDirection::Downlink;
    const std::int64_t first = dl ? kBand1DlOffset : kBand1UlOffset;
    const std::int64_t last = dl ? kBand1DlLast : kBand1UlLast;
    if (earfcn < first || earfcn > last)
    {
        throw std::out_of_range("EARFCN " + std::to_string(earfcn) + " is outside E-UTRA band 1 " +
                                (dl ? "downlink" : "uplink") + " (valid " + std::to_string(first) + "-" +
                                std::to_string(last) + ")");
    }
    const std::int64_t low = dl ? kBand1DlLow : kBand1UlLow;
    // Integer arithmetic in 100 kHz units, single rounding at the end.
    return static_cast<double>(low + (earfcn - first)) / 10.0;
}

double
nr_arfcn_to_freq_mhz(std::int64_t nr_arfcn)
{
    if (nr_arfcn < kNrSegmentStart || nr_arfcn > kNrSegmentLast)
    {
        throw std::out_of_range("NR-ARFCN " + std::to_string(nr_arfcn) +
                                " is outside the 60 kHz raster segment (valid " +
                                std::to_string(kNrSegmentStart) + "-" + std::to_string(kNrSegmentLast) + ")");
    }
    const std::int64_t khz = kNrSegmentBaseKhz + kNrStepKhz * (nr_arfcn - kNrSegmentStart);
    return static_cast<double>(khz) / 1000.0;
}

double
friis_rx_power(double tx_power_w, double gt, double gr, double lambda_m, double d_m, double loss)
{
    if (!(d_m > 0.0))
    {
        throw std::invalid_argument("Friis model is singular at d <= 0");
    }
    require(loss >= 1.0, "system loss must be >= 1");
    require(gt > 0.0 && gr > 0.0, "antenna gains must be positive");
    require(lambda_m > 0.0, "wavelength must be positive");
    const double ratio = lambda_m / (4.0 * std::numbers::pi * d_m);
    return tx_power_w * gt * gr * ratio * ratio / loss;
}

double
friis_pathloss_db(double lambda_m, double d_m, double loss)
{
    return -linear_to_db(friis_rx_power(1.0, 1.0, 1.0, lambda_m, d_m, loss));
}

std::optional<double>
mmwave_pathloss_db(double d_m, const MmWavePathLossParams& params, double shadow_db)
{
    if (d_m < 1.0)
    {
        throw std::invalid_argument("mmWave LOS model requires d >= 1 m");
    }
    if (d_m > params.max_range_m)
    {
        return std::nullopt;
    }
    return params.alpha_db + 10.0 * params.beta * std::log10(d_m) + shadow_db;
}

double
noise_power_dbm(double bandwidth_hz, double noise_figure_db)
{
    require(bandwidth_hz > 0.0, "bandwidth must be positive");
    return kThermalNoiseDbmPerHz + linear_to_db(bandwidth_hz) + noise_figure_db;
}

std::optional<ChannelSample>
snr_db(const RadioConfig& cfg, const MmWavePathLossParams& mmwave, double d_m, double penalties_db, double shadow_db)
{
    if (!(d_m > 0.0))
    {
        throw std::invalid_argument("link distance must be positive");
    }
    ChannelSample s;
    s.distance_m = d_m;
    if (cfg.rat == Rat::Lte)
    {
        if (d_m > cfg.max_range_m)
        {
            return std::nullopt;
        }
        s.pathloss_db = friis_pathloss_db(cfg.wavelength_m(), d_m, cfg.system_loss);
    }
    else
    {
        // Below the 1 m close-in reference the model is pinned at the intercept.
        const auto pl = mmwave_pathloss_db(std::max(d_m, 1.0), mmwave, shadow_db);
        if (!pl)
        {
            return std::nullopt;
        }
        s.pathloss_db = *pl;
    }
    s.rx_power_dbm = cfg.tx_power_dbm + cfg.tx_gain_dbi + cfg.rx_gain_dbi - s.pathloss_db;
    s.noise_dbm = noise_power_dbm(cfg.bandwidth_hz, cfg.noise_figure_db);
    s.penalties_db = penalties_db;
    s.snr_db = s.rx_power_dbm - penalties_db - s.noise_dbm;
    return s;
}

double
nr_outage_probability(double v_kmh, const VelocityModel& model)
{
    return 1.0 / (1.0 + std::exp(-(v_kmh - model.v_mid_kmh) / model.s_v_kmh));
}

double
velocity_penalty_db(Rat rat, double v_kmh, const VelocityModel& model, RngStream& rng, std::uint64_t /*period*/)
{
    if (v_kmh < 0.0)
    {
        throw std::invalid_argument("velocity must be non-negative");
    }
    if (rat == Rat::Lte)
    {
        return model.lte_slope_db_per_kmh * v_kmh;
    }
    return rng.uniform() < nr_outage_probability(v_kmh, model) ? model.outage_loss_db : 0.0;
}

} // namespace sitesim
