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

#include "sitesim/config.hpp"

#include "sitesim/metrics.hpp"
#include "sitesim/numerology.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sitesim
{

std::string_view
to_string(Preset p)
{
    switch (p)
    {
    case Preset::Scenario1:
        return "scenario1";
    case Preset::Scenario2:
        return "scenario2";
    case Preset::Scenario3:
        return "scenario3";
    case Preset::Custom:
        return "custom";
    }
    return "custom";
}

std::string_view
to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::UeCount:
        return "ue_count";
    case SweepVariable::DataVolume:
        return "data_volume";
    case SweepVariable::Speed:
        return "speed";
    case SweepVariable::StartDistance:
        return "start_distance";
    }
    return "ue_count";
}

std::optional<Preset>
parse_preset(std::string_view text)
{
    for (Preset p : {Preset::Scenario1, Preset::Scenario2, Preset::Scenario3, Preset::Custom})
    {
        if (text == to_string(p))
        {
            return p;
        }
    }
    if (text == "1")
    {
        return Preset::Scenario1;
    }
    if (text == "2")
    {
        return Preset::Scenario2;
    }
    if (text == "3")
    {
        return Preset::Scenario3;
    }
    return std::nullopt;
}

namespace
{

std::optional<SweepVariable>
parse_sweep_variable(std::string_view text)
{
    for (SweepVariable v :
         {SweepVariable::UeCount, SweepVariable::DataVolume, SweepVariable::Speed, SweepVariable::StartDistance})
    {
        if (text == to_string(v))
        {
            return v;
        }
    }
    return std::nullopt;
}

std::vector<double>
arithmetic(double first, double last, double step)
{
    std::vector<double> v;
    for (int k = 0;; ++k)
    {
        const double x = first + k * step;
        if (x > last + 1e-9)
        {
            break;
        }
        v.push_back(x);
    }
    return v;
}

} // namespace

std::vector<double>
default_sweep_values(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::UeCount:
        return arithmetic(2, 20, 2);
    case SweepVariable::DataVolume:
        return arithmetic(1, 8, 1);
    case SweepVariable::Speed:
        return arithmetic(0, 60, 5);
    case SweepVariable::StartDistance:
        return arithmetic(20, 200, 20);
    }
    return {};
}

double
CarrierSpec::resolve_mhz() const
{
    switch (kind)
    {
    case Kind::FreqMhz:
        return freq_mhz;
    case Kind::Earfcn: {
        const auto dir = earfcn_direction(channel);
        if (!dir)
        {
            throw std::out_of_range("EARFCN " + std::to_string(channel) +
                                    " is outside E-UTRA band 1 (downlink 0-599, uplink 18000-18599)");
        }
        return earfcn_to_freq_mhz(channel, *dir);
    }
    case Kind::NrArfcn:
        return nr_arfcn_to_freq_mhz(channel);
    }
    return freq_mhz;
}

RadioConfig
RadioSection::radio_config(Rat rat) const
{
    RadioConfig r;
    r.rat = rat;
    r.carrier_freq_hz = carrier.resolve_mhz() * 1e6;
    r.bandwidth_hz = bandwidth_mhz * 1e6;
    r.tx_power_dbm = tx_power_dbm;
    r.tx_gain_dbi = tx_gain_dbi;
    r.rx_gain_dbi = rx_gain_dbi;
    r.system_loss = system_loss;
    r.noise_figure_db = noise_figure_db;
    r.max_range_m = max_range_m;
    return r;
}

MmWavePathLossParams
RadioSection::mmwave() const
{
    return {mmwave_alpha, mmwave_beta, mmwave_sigma, max_range_m};
}

VelocityModel
RadioSection::velocity() const
{
    return {v_mid_kmh, s_v_kmh, outage_loss_db, velocity_slope_db_per_kmh};
}

double
Placement::radius(std::size_t i, std::size_t n) const
{
    if (!uniform)
    {
        return radii.at(i);
    }
    if (n <= 1)
    {
        return min_m;
    }
    return min_m + (max_m - min_m) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::string
ScenarioConfig::scenario_name() const
{
    return std::string(to_string(preset));
}

bool
ScenarioConfig::operator==(const ScenarioConfig& o) const
{
    return preset == o.preset && rats == o.rats && sweep_variable == o.sweep_variable &&
           sweep_values == o.sweep_values && ue_count == o.ue_count && duration_s == o.duration_s &&
           warmup_s == o.warmup_s && replications == o.replications && seed_base == o.seed_base &&
           lte_radio == o.lte_radio && nr_radio == o.nr_radio && lte_phy == o.lte_phy && nr_phy == o.nr_phy &&
           traffic == o.traffic && mobility == o.mobility;
}

namespace
{

std::string
join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
        if (i > 0)
        {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics, "\n")),
      m_diagnostics(std::move(diagnostics))
{
}

ScenarioConfig
default_config(Preset preset)
{
    ScenarioConfig c;
    c.preset = preset;

    c.lte_radio.carrier = {CarrierSpec::Kind::Earfcn, 0.0, 18100};
    c.lte_radio.bandwidth_mhz = 5.0;
    c.lte_radio.tx_power_dbm = 23.0;
    c.lte_radio.tx_gain_dbi = 0.0;
    c.lte_radio.rx_gain_dbi = 0.0;
    c.lte_radio.system_loss = 1.0;
    c.lte_radio.noise_figure_db = 9.0;
    c.lte_radio.max_range_m = 10000.0;

    c.nr_radio.carrier = {CarrierSpec::Kind::NrArfcn, 0.0, 2079166};
    c.nr_radio.bandwidth_mhz = 100.0;
    c.nr_radio.tx_power_dbm = -2.0;
    c.nr_radio.tx_gain_dbi = 10.0;
    c.nr_radio.rx_gain_dbi = 24.0;
    c.nr_radio.noise_figure_db = 7.0;
    c.nr_radio.max_range_m = 200.0;

    c.lte_phy = PhySection{};
    c.nr_phy.scs_khz = 120;
    c.nr_phy.rb_count = 66;
    c.nr_phy.la_overhead = 0.7;
    c.nr_phy.la_eff_max = 7.0;
    c.nr_phy.harq_rtt_ms = 0.5;

    switch (preset)
    {
    case Preset::Scenario1:
    case Preset::Custom:
        c.sweep_variable = SweepVariable::UeCount;
        c.traffic.data_volume_mbps = 2.0;
        break;
    case Preset::Scenario2:
        c.sweep_variable = SweepVariable::DataVolume;
        c.ue_count = 8;
        break;
    case Preset::Scenario3:
        c.sweep_variable = SweepVariable::Speed;
        c.ue_count = 8;
        c.traffic.data_volume_mbps = 2.0;
        break;
    }
    c.sweep_values = default_sweep_values(c.sweep_variable);
    return c;
}

namespace
{

// -- value codecs ---------------------------------------------------------

std::string_view
trim(std::string_view s)
{
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
    {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view>
split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true)
    {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos)
        {
            break;
        }
        pos = next + 1;
    }
    return out;
}

struct ValueError
{
    std::string message;
};

double
to_double(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
    {
        throw ValueError{"expected a number, got '" + std::string(s) + "'"};
    }
    return v;
}

template <typename Int>
Int
to_int(std::string_view s)
{
    Int v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    {
        throw ValueError{"expected an integer, got '" + std::string(s) + "'"};
    }
    return v;
}

std::vector<double>
to_double_list(std::string_view s)
{
    std::vector<double> out;
    for (auto part : split(s, ','))
    {
        out.push_back(to_double(part));
    }
    return out;
}

std::string
render_list(const std::vector<double>& xs)
{
    std::vector<std::string> parts;
    for (double x : xs)
    {
        parts.push_back(format_number(x));
    }
    return join(parts, ",");
}

Placement
to_placement(std::string_view s)
{
    Placement p;
    if (s.starts_with("uniform:"))
    {
        const auto bounds = to_double_list(s.substr(8));
        if (bounds.size() != 2)
        {
            throw ValueError{"expected uniform:min,max"};
        }
        p.uniform = true;
        p.min_m = bounds[0];
        p.max_m = bounds[1];
        return p;
    }
    p.uniform = false;
    p.min_m = 0.0;
    p.max_m = 0.0;
    p.radii = to_double_list(s);
    return p;
}

std::string
render_placement(const Placement& p)
{
    if (p.uniform)
    {
        return "uniform:" + format_number(p.min_m) + "," + format_number(p.max_m);
    }
    return render_list(p.radii);
}

std::vector<Rat>
to_rats(std::string_view s)
{
    if (s == "both")
    {
        return {Rat::Lte, Rat::NrMmWave};
    }
    std::vector<Rat> out;
    for (auto part : split(s, ','))
    {
        const auto r = parse_rat(part);
        if (!r)
        {
            throw ValueError{"unknown RAT '" + std::string(part) + "' (expected lte or nr)"};
        }
        out.push_back(*r);
    }
    return out;
}

std::string
render_rats(const std::vector<Rat>& rats)
{
    std::vector<std::string> parts;
    for (Rat r : rats)
    {
        parts.emplace_back(to_string(r));
    }
    return join(parts, ",");
}

// -- key table ------------------------------------------------------------

struct KeySpec
{
    std::string key;
    std::function<void(ScenarioConfig&, std::string_view)> set;
    // nullopt: key is inactive in this config and is not rendered.
    std::function<std::optional<std::string>(const ScenarioConfig&)> get;
};

template <typename Member>
KeySpec
double_key(std::string key, Member member)
{
    return {std::move(key),
            [member](ScenarioConfig& c, std::string_view v) { member(c) = to_double(v); },
            [member](const ScenarioConfig& c) -> std::optional<std::string> {
                return format_number(member(const_cast<ScenarioConfig&>(c)));
            }};
}

template <typename Member>
KeySpec
int_key(std::string key, Member member)
{
    return {std::move(key),
            [member](ScenarioConfig& c, std::string_view v) { member(c) = to_int<int>(v); },
            [member](const ScenarioConfig& c) -> std::optional<std::string> {
                return std::to_string(member(const_cast<ScenarioConfig&>(c)));
            }};
}

KeySpec
carrier_key(std::string key, Rat rat, CarrierSpec::Kind kind)
{
    auto section = [rat](ScenarioConfig& c) -> RadioSection& { return rat == Rat::Lte ? c.lte_radio : c.nr_radio; };
    return {std::move(key),
            [section, kind](ScenarioConfig& c, std::string_view v) {
                CarrierSpec& cs = section(c).carrier;
                cs.kind = kind;
                if (kind == CarrierSpec::Kind::FreqMhz)
                {
                    cs.freq_mhz = to_double(v);
                    cs.channel = 0;
                }
                else
                {
                    cs.channel = to_int<std::int64_t>(v);
                    cs.freq_mhz = 0.0;
                }
            },
            [section, kind](const ScenarioConfig& c) -> std::optional<std::string> {
                const CarrierSpec& cs = section(const_cast<ScenarioConfig&>(c)).carrier;
                if (cs.kind != kind)
                {
                    return std::nullopt;
                }
                return kind == CarrierSpec::Kind::FreqMhz ? format_number(cs.freq_mhz) : std::to_string(cs.channel);
            }};
}

void
add_radio_keys(std::vector<KeySpec>& keys, Rat rat)
{
    const std::string p = rat == Rat::Lte ? "radio.lte." : "radio.nr.";
    auto sec = [rat](ScenarioConfig& c) -> RadioSection& { return rat == Rat::Lte ? c.lte_radio : c.nr_radio; };

    keys.push_back(carrier_key(p + "carrier_freq_mhz", rat, CarrierSpec::Kind::FreqMhz));
    keys.push_back(carrier_key(p + (rat == Rat::Lte ? "earfcn" : "nr_arfcn"),
                               rat,
                               rat == Rat::Lte ? CarrierSpec::Kind::Earfcn : CarrierSpec::Kind::NrArfcn));
    keys.push_back(double_key(p + "bandwidth_mhz", [sec](ScenarioConfig& c) -> double& { return sec(c).bandwidth_mhz; }));
    keys.push_back(double_key(p + "tx_power_dbm", [sec](ScenarioConfig& c) -> double& { return sec(c).tx_power_dbm; }));
    keys.push_back(double_key(p + "tx_gain_dbi", [sec](ScenarioConfig& c) -> double& { return sec(c).tx_gain_dbi; }));
    keys.push_back(double_key(p + "rx_gain_dbi", [sec](ScenarioConfig& c) -> double& { return sec(c).rx_gain_dbi; }));
    keys.push_back(
        double_key(p + "noise_figure_db", [sec](ScenarioConfig& c) -> double& { return sec(c).noise_figure_db; }));
    keys.push_back(double_key(p + "max_range_m", [sec](ScenarioConfig& c) -> double& { return sec(c).max_range_m; }));
    if (rat == Rat::Lte)
    {
        keys.push_back(double_key(p + "system_loss", [sec](ScenarioConfig& c) -> double& { return sec(c).system_loss; }));
        keys.push_back(double_key(p + "velocity_slope_db_per_kmh",
                                  [sec](ScenarioConfig& c) -> double& { return sec(c).velocity_slope_db_per_kmh; }));
    }
    else
    {
        keys.push_back(double_key(p + "mmwave_alpha", [sec](ScenarioConfig& c) -> double& { return sec(c).mmwave_alpha; }));
        keys.push_back(double_key(p + "mmwave_beta", [sec](ScenarioConfig& c) -> double& { return sec(c).mmwave_beta; }));
        keys.push_back(double_key(p + "mmwave_sigma", [sec](ScenarioConfig& c) -> double& { return sec(c).mmwave_sigma; }));
        keys.push_back(double_key(p + "v_mid_kmh", [sec](ScenarioConfig& c) -> double& { return sec(c).v_mid_kmh; }));
        keys.push_back(double_key(p + "s_v_kmh", [sec](ScenarioConfig& c) -> double& { return sec(c).s_v_kmh; }));
        keys.push_back(
            double_key(p + "outage_loss_db", [sec](ScenarioConfig& c) -> double& { return sec(c).outage_loss_db; }));
        keys.push_back(
            double_key(p + "beam_refresh_ms", [sec](ScenarioConfig& c) -> double& { return sec(c).beam_refresh_ms; }));
    }
}

void
add_phy_keys(std::vector<KeySpec>& keys, Rat rat)
{
    const std::string p = rat == Rat::Lte ? "phy.lte." : "phy.nr.";
    auto sec = [rat](ScenarioConfig& c) -> PhySection& { return rat == Rat::Lte ? c.lte_phy : c.nr_phy; };
    keys.push_back(int_key(p + "scs_khz", [sec](ScenarioConfig& c) -> int& { return sec(c).scs_khz; }));
    keys.push_back(int_key(p + "rb_count", [sec](ScenarioConfig& c) -> int& { return sec(c).rb_count; }));
    keys.push_back(int_key(p + "pf_window", [sec](ScenarioConfig& c) -> int& { return sec(c).pf_window; }));
    keys.push_back(double_key(p + "la_overhead", [sec](ScenarioConfig& c) -> double& { return sec(c).la_overhead; }));
    keys.push_back(double_key(p + "la_eff_max", [sec](ScenarioConfig& c) -> double& { return sec(c).la_eff_max; }));
    keys.push_back(
        double_key(p + "la_snr_floor_db", [sec](ScenarioConfig& c) -> double& { return sec(c).la_snr_floor_db; }));
    keys.push_back(int_key(p + "harq_max_retx", [sec](ScenarioConfig& c) -> int& { return sec(c).harq_max_retx; }));
    keys.push_back(double_key(p + "harq_rtt_ms", [sec](ScenarioConfig& c) -> double& { return sec(c).harq_rtt_ms; }));
    keys.push_back(
        double_key(p + "harq_combining_db", [sec](ScenarioConfig& c) -> double& { return sec(c).harq_combining_db; }));
    keys.push_back(
        double_key(p + "bler_threshold_db", [sec](ScenarioConfig& c) -> double& { return sec(c).bler_threshold_db; }));
    keys.push_back(
        double_key(p + "bler_steepness_db", [sec](ScenarioConfig& c) -> double& { return sec(c).bler_steepness_db; }));
}

const std::vector<KeySpec>&
key_table()
{
    static const std::vector<KeySpec> table = [] {
        std::vector<KeySpec> k;
        k.push_back({"preset",
                     [](ScenarioConfig& c, std::string_view v) {
                         const auto p = parse_preset(v);
                         if (!p)
                         {
                             throw ValueError{"unknown preset '" + std::string(v) + "'"};
                         }
                         c.preset = *p;
                     },
                     [](const ScenarioConfig& c) -> std::optional<std::string> {
                         return std::string(to_string(c.preset));
                     }});
        k.push_back({"rats",
                     [](ScenarioConfig& c, std::string_view v) { c.rats = to_rats(v); },
                     [](const ScenarioConfig& c) -> std::optional<std::string> { return render_rats(c.rats); }});
        k.push_back({"sweep_variable",
                     [](ScenarioConfig& c, std::string_view v) {
                         const auto s = parse_sweep_variable(v);
                         if (!s)
                         {
                             throw ValueError{"unknown sweep variable '" + std::string(v) +
                                              "' (expected ue_count, data_volume, speed or start_distance)"};
                         }
                         c.sweep_variable = *s;
                     },
                     [](const ScenarioConfig& c) -> std::optional<std::string> {
                         return std::string(to_string(c.sweep_variable));
                     }});
        k.push_back({"sweep_values",
                     [](ScenarioConfig& c, std::string_view v) { c.sweep_values = to_double_list(v); },
                     [](const ScenarioConfig& c) -> std::optional<std::string> { return render_list(c.sweep_values); }});
        k.push_back(int_key("ue_count", [](ScenarioConfig& c) -> int& { return c.ue_count; }));
        k.push_back(double_key("duration_s", [](ScenarioConfig& c) -> double& { return c.duration_s; }));
        k.push_back(double_key("warmup_s", [](ScenarioConfig& c) -> double& { return c.warmup_s; }));
        k.push_back(int_key("replications", [](ScenarioConfig& c) -> int& { return c.replications; }));
        k.push_back({"seed_base",
                     [](ScenarioConfig& c, std::string_view v) { c.seed_base = to_int<std::uint64_t>(v); },
                     [](const ScenarioConfig& c) -> std::optional<std::string> { return std::to_string(c.seed_base); }});
        add_radio_keys(k, Rat::Lte);
        add_radio_keys(k, Rat::NrMmWave);
        add_phy_keys(k, Rat::Lte);
        add_phy_keys(k, Rat::NrMmWave);
        k.push_back(double_key("traffic.data_volume_mbps",
                               [](ScenarioConfig& c) -> double& { return c.traffic.data_volume_mbps; }));
        k.push_back(int_key("traffic.packet_size_bytes",
                            [](ScenarioConfig& c) -> int& { return c.traffic.packet_size_bytes; }));
        k.push_back(int_key("traffic.queue_capacity_pkts",
                            [](ScenarioConfig& c) -> int& { return c.traffic.queue_capacity_pkts; }));
        k.push_back(double_key("traffic.app_start_s", [](ScenarioConfig& c) -> double& { return c.traffic.app_start_s; }));
        k.push_back(double_key("traffic.app_stop_s", [](ScenarioConfig& c) -> double& { return c.traffic.app_stop_s; }));
        k.push_back(double_key("traffic.core_latency_ms",
                               [](ScenarioConfig& c) -> double& { return c.traffic.core_latency_ms; }));
        k.push_back({"mobility.placement",
                     [](ScenarioConfig& c, std::string_view v) { c.mobility.placement = to_placement(v); },
                     [](const ScenarioConfig& c) -> std::optional<std::string> {
                         return render_placement(c.mobility.placement);
                     }});
        k.push_back(double_key("mobility.speed_kmh", [](ScenarioConfig& c) -> double& { return c.mobility.speed_kmh; }));
        k.push_back(double_key("mobility.corridor_min_m",
                               [](ScenarioConfig& c) -> double& { return c.mobility.corridor_min_m; }));
        k.push_back(double_key("mobility.corridor_max_m",
                               [](ScenarioConfig& c) -> double& { return c.mobility.corridor_max_m; }));
        return k;
    }();
    return table;
}

const KeySpec*
find_key(std::string_view key)
{
    for (const auto& k : key_table())
    {
        if (k.key == key)
        {
            return &k;
        }
    }
    return nullptr;
}

struct Entry
{
    int line;
    std::string key;
    std::string value;
};

bool
is_carrier_key(std::string_view key)
{
    return key.ends_with(".carrier_freq_mhz") || key.ends_with(".earfcn") || key.ends_with(".nr_arfcn");
}

} // namespace

ScenarioConfig
parse_config(std::string_view text, std::optional<Preset> preset_override)
{
    std::vector<std::string> errors;
    std::vector<Entry> entries;
    std::map<std::string, int> seen;

    int line_no = 0;
    for (auto raw : split(text, '\n'))
    {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
        {
            line = trim(line.substr(0, hash));
        }
        if (line.empty())
        {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            errors.push_back("line " + std::to_string(line_no) + ": syntax error, expected 'key = value'");
            continue;
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
        {
            errors.push_back("line " + std::to_string(line_no) + ": syntax error, missing key");
            continue;
        }
        // Alias: mobility.sweep selects between the two mobility sweep axes.
        if (key == "mobility.sweep")
        {
            if (value != "speed" && value != "start_distance")
            {
                errors.push_back("line " + std::to_string(line_no) +
                                 ": mobility.sweep: expected speed or start_distance");
                continue;
            }
            key = "sweep_variable";
        }
        if (find_key(key) == nullptr)
        {
            errors.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            continue;
        }
        if (auto it = seen.find(key); it != seen.end())
        {
            errors.push_back("line " + std::to_string(line_no) + ": " + key + ": already set on line " +
                             std::to_string(it->second));
            continue;
        }
        seen.emplace(key, line_no);
        entries.push_back({line_no, key, value});
    }

    // The preset decides the defaults every other key overrides.
    Preset preset = Preset::Scenario1;
    for (const auto& e : entries)
    {
        if (e.key == "preset")
        {
            if (const auto p = parse_preset(e.value))
            {
                preset = *p;
            }
            else
            {
                errors.push_back("line " + std::to_string(e.line) + ": preset: unknown preset '" + e.value + "'");
            }
        }
    }
    if (preset_override)
    {
        preset = *preset_override;
    }
    ScenarioConfig cfg = default_config(preset);

    std::set<std::string> carrier_set;
    for (const auto& e : entries)
    {
        if (e.key == "preset")
        {
            continue;
        }
        if (is_carrier_key(e.key))
        {
            const std::string section = e.key.substr(0, e.key.rfind('.'));
            if (!carrier_set.insert(section).second)
            {
                errors.push_back("line " + std::to_string(e.line) + ": " + e.key + ": carrier for " + section +
                                 " given more than once");
                continue;
            }
        }
        try
        {
            find_key(e.key)->set(cfg, e.value);
        }
        catch (const ValueError& err)
        {
            errors.push_back("line " + std::to_string(e.line) + ": " + e.key + ": " + err.message);
        }
    }
    if (seen.contains("sweep_variable") && !seen.contains("sweep_values") &&
        cfg.sweep_variable != default_config(preset).sweep_variable)
    {
        cfg.sweep_values = default_sweep_values(cfg.sweep_variable);
    }

    if (errors.empty())
    {
        errors = validate(cfg);
    }
    if (!errors.empty())
    {
        throw ConfigError(std::move(errors));
    }
    cfg.source_text = std::string(text);
    return cfg;
}

namespace
{

void
validate_radio(std::vector<std::string>& out, const RadioSection& r, Rat rat)
{
    const std::string p = rat == Rat::Lte ? "radio.lte." : "radio.nr.";
    try
    {
        const double f = r.carrier.resolve_mhz();
        if (!(f > 0.0))
        {
            out.push_back(p + "carrier_freq_mhz: must be positive");
        }
    }
    catch (const std::exception& e)
    {
        out.push_back(p + (rat == Rat::Lte ? "earfcn: " : "nr_arfcn: ") + e.what());
    }
    if (!(r.bandwidth_mhz > 0.0))
    {
        out.push_back(p + "bandwidth_mhz: must be positive");
    }
    if (!(r.system_loss >= 1.0))
    {
        out.push_back(p + "system_loss: must be >= 1");
    }
    if (!(r.max_range_m > 0.0))
    {
        out.push_back(p + "max_range_m: must be positive");
    }
    if (rat == Rat::NrMmWave)
    {
        if (!(r.mmwave_beta > 0.0))
        {
            out.push_back(p + "mmwave_beta: must be positive");
        }
        if (!(r.mmwave_sigma >= 0.0))
        {
            out.push_back(p + "mmwave_sigma: must be non-negative");
        }
        if (!(r.s_v_kmh > 0.0))
        {
            out.push_back(p + "s_v_kmh: must be positive");
        }
        if (!(r.outage_loss_db >= 0.0))
        {
            out.push_back(p + "outage_loss_db: must be non-negative");
        }
        if (!(r.beam_refresh_ms > 0.0))
        {
            out.push_back(p + "beam_refresh_ms: must be positive");
        }
    }
    else if (!(r.velocity_slope_db_per_kmh >= 0.0))
    {
        out.push_back(p + "velocity_slope_db_per_kmh: must be non-negative");
    }
}

void
validate_phy(std::vector<std::string>& out, const PhySection& s, Rat rat)
{
    const std::string p = rat == Rat::Lte ? "phy.lte." : "phy.nr.";
    if (!is_supported_scs(s.scs_khz))
    {
        out.push_back(p + "scs_khz: must be one of 15, 30, 60, 120");
    }
    if (s.rb_count < 1)
    {
        out.push_back(p + "rb_count: must be >= 1");
    }
    if (s.pf_window < 1)
    {
        out.push_back(p + "pf_window: must be >= 1");
    }
    if (!(s.la_overhead > 0.0 && s.la_overhead <= 1.0))
    {
        out.push_back(p + "la_overhead: must be in (0, 1]");
    }
    if (!(s.la_eff_max > 0.0))
    {
        out.push_back(p + "la_eff_max: must be positive");
    }
    if (s.harq_max_retx < 0)
    {
        out.push_back(p + "harq_max_retx: must be >= 0");
    }
    if (!(s.harq_rtt_ms > 0.0))
    {
        out.push_back(p + "harq_rtt_ms: must be positive");
    }
    if (!(s.bler_steepness_db > 0.0))
    {
        out.push_back(p + "bler_steepness_db: must be positive");
    }
}

} // namespace

std::vector<std::string>
validate(const ScenarioConfig& c)
{
    std::vector<std::string> out;
    if (c.replications < 1)
    {
        out.push_back("replications: must be >= 1");
    }
    if (!(c.duration_s > 0.0))
    {
        out.push_back("duration_s: must be positive");
    }
    if (!(c.warmup_s >= 0.0))
    {
        out.push_back("warmup_s: must be non-negative");
    }
    if (!(c.duration_s > c.warmup_s))
    {
        out.push_back("duration_s: must exceed warmup_s");
    }
    if (c.rats.empty())
    {
        out.push_back("rats: at least one RAT is required");
    }
    else if (std::set<Rat>(c.rats.begin(), c.rats.end()).size() != c.rats.size())
    {
        out.push_back("rats: duplicate entry");
    }
    if (c.ue_count < 1)
    {
        out.push_back("ue_count: must be >= 1");
    }
    if (c.sweep_values.empty())
    {
        out.push_back("sweep_values: must not be empty");
    }
    int max_ues = c.ue_count;
    for (double v : c.sweep_values)
    {
        switch (c.sweep_variable)
        {
        case SweepVariable::UeCount:
            if (!(v >= 1.0) || v != std::floor(v))
            {
                out.push_back("sweep_values: UE counts must be positive integers");
            }
            else
            {
                max_ues = std::max(max_ues, static_cast<int>(v));
            }
            break;
        case SweepVariable::DataVolume:
            if (!(v > 0.0))
            {
                out.push_back("sweep_values: data volumes must be positive");
            }
            break;
        case SweepVariable::Speed:
            if (!(v >= 0.0))
            {
                out.push_back("sweep_values: speeds must be non-negative");
            }
            break;
        case SweepVariable::StartDistance:
            if (!(v >= c.mobility.corridor_min_m && v <= c.mobility.corridor_max_m))
            {
                out.push_back("sweep_values: start distances must lie inside the mobility corridor");
            }
            break;
        }
    }

    validate_radio(out, c.lte_radio, Rat::Lte);
    validate_radio(out, c.nr_radio, Rat::NrMmWave);
    validate_phy(out, c.lte_phy, Rat::Lte);
    validate_phy(out, c.nr_phy, Rat::NrMmWave);

    const auto& t = c.traffic;
    if (!(t.data_volume_mbps > 0.0))
    {
        out.push_back("traffic.data_volume_mbps: must be positive");
    }
    if (t.packet_size_bytes <= 0 || t.packet_size_bytes > 1500)
    {
        out.push_back("traffic.packet_size_bytes: must be in 1..1500");
    }
    if (t.queue_capacity_pkts < 1)
    {
        out.push_back("traffic.queue_capacity_pkts: must be >= 1");
    }
    if (!(t.app_start_s >= 0.0))
    {
        out.push_back("traffic.app_start_s: must be non-negative");
    }
    if (!(t.app_stop_s > t.app_start_s))
    {
        out.push_back("traffic.app_stop_s: must exceed traffic.app_start_s");
    }
    if (!(t.core_latency_ms >= 0.0))
    {
        out.push_back("traffic.core_latency_ms: must be non-negative");
    }
    const double w0 = std::max(c.warmup_s, t.app_start_s);
    const double w1 = std::min(t.app_stop_s, c.duration_s);
    if (!(w1 > w0))
    {
        out.push_back("warmup_s: measurement window [max(warmup_s, app_start_s), min(app_stop_s, duration_s)) is empty");
    }

    const auto& m = c.mobility;
    if (!(m.corridor_min_m >= 1.0))
    {
        out.push_back("mobility.corridor_min_m: must be >= 1");
    }
    if (!(m.corridor_max_m >= m.corridor_min_m))
    {
        out.push_back("mobility.corridor_max_m: must be >= mobility.corridor_min_m");
    }
    for (Rat r : c.rats)
    {
        if (m.corridor_max_m > c.radio(r).max_range_m)
        {
            out.push_back("mobility.corridor_max_m: exceeds radio." + std::string(to_string(r)) +
                          ".max_range_m coverage");
        }
    }
    if (!(m.speed_kmh >= 0.0))
    {
        out.push_back("mobility.speed_kmh: must be non-negative");
    }
    if (m.placement.uniform)
    {
        if (!(m.placement.min_m <= m.placement.max_m))
        {
            out.push_back("mobility.placement: uniform range is reversed");
        }
        if (m.placement.min_m < m.corridor_min_m || m.placement.max_m > m.corridor_max_m)
        {
            out.push_back("mobility.placement: radii must lie inside the mobility corridor");
        }
    }
    else
    {
        if (m.placement.radii.size() < static_cast<std::size_t>(max_ues))
        {
            out.push_back("mobility.placement: needs one radius per UE (" + std::to_string(max_ues) + ")");
        }
        for (double r : m.placement.radii)
        {
            if (r < m.corridor_min_m || r > m.corridor_max_m)
            {
                out.push_back("mobility.placement: radii must lie inside the mobility corridor");
                break;
            }
        }
    }
    return out;
}

std::string
render_config(const ScenarioConfig& cfg)
{
    std::ostringstream os;
    for (const auto& k : key_table())
    {
        if (const auto v = k.get(cfg))
        {
            os << k.key << " = " << *v << '\n';
        }
    }
    return os.str();
}

} // namespace sitesim
