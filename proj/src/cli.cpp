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

#include "sitesim/cli.hpp"

#include "sitesim/config.hpp"
#include "sitesim/metrics.hpp"
#include "sitesim/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sitesim
{

namespace
{

std::string
read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw std::runtime_error("cannot read config file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string
metadata(const ScenarioConfig& cfg)
{
    std::ostringstream os;
    os << "# sitesim run metadata. The key = value block is the effective\n"
          "# configuration including defaults, and parses as a config file.\n";
    os << render_config(cfg);
    os << "# derived: lte carrier " << format_number(cfg.lte_radio.carrier.resolve_mhz()) << " MHz, nr carrier "
       << format_number(cfg.nr_radio.carrier.resolve_mhz()) << " MHz\n";
    os << "# seeds: replication r at sweep index s uses mix64((seed_base + r) ^ mix64(s + 0x5157000000000001))\n";
    os << "# notes:\n"
          "#   transmit powers, antenna gains and noise figures are assumed defaults\n"
          "#   NR uplink uses round-robin TDMA, one UE per slot; LTE uses proportional fair per RB\n"
          "#   link adaptation: truncated Shannon, rate = bw * la_overhead * min(log2(1 + snr), la_eff_max)\n"
          "#   data volume is per UE; throughput is the cell aggregate over the measurement window\n"
          "#   mobility: UEs start evenly over the placement range and move radially, reflecting\n"
          "#     at corridor_min_m and corridor_max_m\n"
          "#   shadowing and NR beam outage are drawn once per UE and beam refresh period\n";
    os << "# input:\n";
    std::istringstream in(cfg.source_text);
    for (std::string line; std::getline(in, line);)
    {
        os << "#| " << line << '\n';
    }
    return os.str();
}

struct RunArgs
{
    std::string preset;
    std::string rat;
    std::optional<int> reps;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string config;
    bool trace = false;
    int threads = 1;
};

int
do_run(const RunArgs& a, std::ostream& out, std::ostream& err)
{
    std::optional<Preset> preset;
    if (!a.preset.empty())
    {
        preset = parse_preset(a.preset);
    }
    std::string text = a.config.empty() ? "" : read_file(a.config);
    if (a.config.empty())
    {
        text = "preset = " + std::string(to_string(preset.value_or(Preset::Scenario1))) + "\n";
    }
    ScenarioConfig cfg = parse_config(text, preset);

    if (!a.rat.empty())
    {
        if (a.rat == "both")
        {
            cfg.rats = {Rat::Lte, Rat::NrMmWave};
        }
        else
        {
            cfg.rats = {*parse_rat(a.rat)};
        }
    }
    if (a.reps)
    {
        cfg.replications = *a.reps;
    }
    if (a.seed)
    {
        cfg.seed_base = *a.seed;
    }
    if (const auto problems = validate(cfg); !problems.empty())
    {
        throw ConfigError(problems);
    }

    SweepOptions opts;
    opts.threads = a.threads;
    if (a.trace)
    {
        const std::filesystem::path out_path = a.out.empty() ? std::filesystem::path(".") : std::filesystem::path(a.out);
        opts.trace_dir = out_path.has_parent_path() ? out_path.parent_path() : std::filesystem::path(".");
    }
    const SweepOutput result =
        opts.threads > 1 ? run_scenario_parallel(cfg, opts) : run_scenario_serial(cfg, opts);

    if (a.out.empty())
    {
        out << render_csv(result.summaries);
        return 0;
    }
    export_csv(result.summaries, a.out);
    const std::string meta_path = a.out + ".meta";
    std::ofstream meta(meta_path);
    if (!meta || !(meta << metadata(cfg)))
    {
        err << "error: cannot write metadata " << meta_path << '\n';
        return 1;
    }
    out << "wrote " << result.summaries.size() << " rows to " << a.out << '\n';
    return 0;
}

int
do_validate(const std::string& path, std::ostream& out)
{
    const ScenarioConfig cfg = parse_config(read_file(path));
    out << path << ": ok (" << cfg.scenario_name() << ", " << plan_jobs(cfg).size() << " runs)\n";
    return 0;
}

} // namespace

int
cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"LTE / 5G mmWave uplink video simulator for construction sites", "sitesim"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a scenario sweep and write aggregated CSV");
    run->add_option("--preset", run_args.preset, "Scenario preset")
        ->check(CLI::IsMember({"1", "2", "3", "scenario1", "scenario2", "scenario3", "custom"}));
    run->add_option("--rat", run_args.rat, "Radio access technology")->check(CLI::IsMember({"lte", "nr", "both"}));
    run->add_option("--reps", run_args.reps, "Replications per sweep point")->check(CLI::PositiveNumber);
    run->add_option("--seed", run_args.seed, "Seed base");
    run->add_option("--out", run_args.out, "CSV output path (stdout when omitted)");
    run->add_option("--config", run_args.config, "Config file")->check(CLI::ExistingFile);
    run->add_flag("--trace", run_args.trace, "Write per-run event traces next to the output");
    run->add_option("--threads", run_args.threads, "Worker threads for the sweep")->check(CLI::PositiveNumber);

    std::string validate_path;
    auto* val = app.add_subcommand("validate", "Check a config file");
    val->add_option("--config", validate_path, "Config file")->required();

    auto* defaults = app.add_subcommand("print-defaults", "Print the complete default config");
    std::string defaults_preset = "scenario1";
    defaults->add_option("--preset", defaults_preset, "Preset whose defaults to print")
        ->check(CLI::IsMember({"1", "2", "3", "scenario1", "scenario2", "scenario3", "custom"}));

    try
    {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i)
        {
            args.emplace_back(argv[i]);
        }
        app.parse(args);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    try
    {
        if (run->parsed())
        {
            return do_run(run_args, out, err);
        }
        if (val->parsed())
        {
            return do_validate(validate_path, out);
        }
        out << render_config(default_config(*parse_preset(defaults_preset)));
        return 0;
    }
    catch (const ConfigError& e)
    {
        for (const auto& d : e.diagnostics())
        {
            err << "config error: " << d << '\n';
        }
        return 1;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace sitesim
