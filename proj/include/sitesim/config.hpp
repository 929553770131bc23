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

#ifndef SITESIM_CONFIG_HPP
#define SITESIM_CONFIG_HPP

#include "sitesim/harq.hpp"
#include "sitesim/link_adaptation.hpp"
#include "sitesim/radio_channel.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sitesim
{

enum class Preset : std::uint8_t
{
    Scenario1,
    Scenario2,
    Scenario3,
    Custom,
};

enum class SweepVariable : std::uint8_t
{
    UeCount,
    DataVolume,
    Speed,
    StartDistance,
};

std::string_view to_string(Preset p);
std::string_view to_string(SweepVariable v);

/// How the carrier was given: directly in MHz or as a raster channel number.
struct CarrierSpec
{
    enum class Kind : std::uint8_t
    {
        FreqMhz,
        Earfcn,
        NrArfcn,
    };
    Kind kind = Kind::FreqMhz;
    double freq_mhz = 0.0;
    std::int64_t channel = 0;

    /// Throws std::out_of_range for channels outside the supported rasters.
    double resolve_mhz() const;
    friend bool operator==(const CarrierSpec&, const CarrierSpec&) = default;
};

struct RadioSection
{
    CarrierSpec carrier;
    double bandwidth_mhz = 0.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double system_loss = 1.0;
    double noise_figure_db = 0.0;
    double max_range_m = 0.0;
    // NR only
    double mmwave_alpha = 61.4;
    double mmwave_beta = 2.0;
    double mmwave_sigma = 5.8;
    double v_mid_kmh = 45.0;
    double s_v_kmh = 4.0;
    double outage_loss_db = 30.0;
    double beam_refresh_ms = 100.0;
    // LTE only
    double velocity_slope_db_per_kmh = 0.02;

    RadioConfig radio_config(Rat rat) const;
    MmWavePathLossParams mmwave() const;
    VelocityModel velocity() const;
    friend bool operator==(const RadioSection&, const RadioSection&) = default;
};

struct PhySection
{
    int scs_khz = 15;
    int rb_count = 25;
    int pf_window = 100;
    double la_overhead = 0.75;
    double la_eff_max = 4.5;
    double la_snr_floor_db = -5.0;
    int harq_max_retx = 3;
    double harq_rtt_ms = 8.0;
    double harq_combining_db = 2.0;
    double bler_threshold_db = 3.0;
    double bler_steepness_db = 1.0;

    LinkAdaptation link_adaptation() const { return {la_overhead, la_eff_max, la_snr_floor_db}; }
    HarqProcess harq() const { return {harq_max_retx, harq_combining_db, harq_rtt_ms * 1e-3}; }
    BlerModel bler() const { return {bler_threshold_db, bler_steepness_db}; }
    friend bool operator==(const PhySection&, const PhySection&) = default;
};

struct TrafficSection
{
    double data_volume_mbps = 2.0; // per UE
    int packet_size_bytes = 1250;
    int queue_capacity_pkts = 100;
    double app_start_s = 0.0;
    double app_stop_s = 20.0;
    double core_latency_ms = 1.0;
    friend bool operator==(const TrafficSection&, const TrafficSection&) = default;
};

/// "uniform:min,max" spreads UEs evenly over [min, max] m; otherwise an
/// explicit radius per UE.
struct Placement
{
    bool uniform = true;
    double min_m = 20.0;
    double max_m = 100.0;
    std::vector<double> radii;

    /// Radius of UE i out of n.
    double radius(std::size_t i, std::size_t n) const;
    friend bool operator==(const Placement&, const Placement&) = default;
};

struct MobilitySection
{
    Placement placement;
    double speed_kmh = 0.0;
    double corridor_min_m = 20.0;
    double corridor_max_m = 200.0;
    friend bool operator==(const MobilitySection&, const MobilitySection&) = default;
};

struct ScenarioConfig
{
    Preset preset = Preset::Scenario1;
    std::vector<Rat> rats{Rat::Lte, Rat::NrMmWave};
    SweepVariable sweep_variable = SweepVariable::UeCount;
    std::vector<double> sweep_values;
    int ue_count = 8;
    double duration_s = 20.0;
    double warmup_s = 1.0;
    int replications = 5;
    std::uint64_t seed_base = 1;
    RadioSection lte_radio;
    RadioSection nr_radio;
    PhySection lte_phy;
    PhySection nr_phy;
    TrafficSection traffic;
    MobilitySection mobility;

    /// Text the config was parsed from; not part of equality.
    std::string source_text;

    const RadioSection& radio(Rat rat) const { return rat == Rat::Lte ? lte_radio : nr_radio; }
    const PhySection& phy(Rat rat) const { return rat == Rat::Lte ? lte_phy : nr_phy; }
    std::string scenario_name() const;

    bool operator==(const ScenarioConfig& o) const;
};

class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(std::vector<std::string> diagnostics);
    const std::vector<std::string>& diagnostics() const { return m_diagnostics; }

  private:
    std::vector<std::string> m_diagnostics;
};

ScenarioConfig default_config(Preset preset = Preset::Scenario1);
std::vector<double> default_sweep_values(SweepVariable v);

/// Flat "key = value" text; '#' starts a comment. Unknown or repeated keys,
/// malformed values and invariant violations raise ConfigError carrying one
/// diagnostic per problem (with line numbers where they apply).
ScenarioConfig parse_config(std::string_view text, std::optional<Preset> preset_override = std::nullopt);

/// Field-level invariant check; empty when the config is valid.
std::vector<std::string> validate(const ScenarioConfig& cfg);

/// Every effective parameter, one key per line, in a parseable form.
std::string render_config(const ScenarioConfig& cfg);

std::optional<Preset> parse_preset(std::string_view text);

} // namespace sitesim

#endif // SITESIM_CONFIG_HPP
