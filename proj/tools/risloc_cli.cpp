// SPDX-License-Identifier: Apache-2.0
//
// risloc — RIS-aided self-localization toolkit for FMCW radar
// Copyright (C) 2026 The risloc authors
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

#include "risloc/capture.hpp"
#include "risloc/config_io.hpp"
#include "risloc/csv.hpp"
#include "risloc/experiments.hpp"
#include "risloc/localization.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace risloc;

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

ScenarioConfig load_or_default(const std::string &config_path)
{
    if (config_path.empty())
    {
        ScenarioConfig cfg;
        cfg.validate();
        return cfg;
    }
    return load_config(config_path);
}

FrameRange parse_trim(const std::string &spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--trim", "expected <first>:<last>");
    try
    {
        const int a = std::stoi(spec.substr(0, colon));
        const int b = std::stoi(spec.substr(colon + 1));
        return {a, b};
    }
    catch (const std::exception &)
    {
        throw CLI::ValidationError("--trim", "expected <first>:<last> with integer frames");
    }
}

std::vector<std::string> split_list(const std::string &values)
{
    std::vector<std::string> out;
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// Values are plain numbers for tx_power/beam_step; the element-count study
// accepts counts with pinned shapes (16, 64, 256) or explicit "AZxEL".
std::vector<StudyPoint> parse_study_values(SweptParameter param, const std::string &values)
{
    std::vector<StudyPoint> points;
    for (const auto &item : split_list(values))
    {
        if (param == SweptParameter::n_ris_elements)
        {
            const auto x = item.find('x');
            if (x != std::string::npos)
            {
                StudyPoint p;
                p.n_az = std::stoi(item.substr(0, x));
                p.n_el = std::stoi(item.substr(x + 1));
                p.value = static_cast<double>(p.n_az) * p.n_el;
                points.push_back(p);
            }
            else
            {
                points.push_back(element_count_point(std::stoi(item)));
            }
        }
        else
        {
            points.push_back(StudyPoint{std::stod(item)});
        }
    }
    if (points.empty())
        throw CLI::ValidationError("--values", "no values given");
    return points;
}

void print_summary(const SweepResult &result)
{
    std::cout << "selected sweep angle m=" << result.selected
              << " (az " << result.aod.azimuth * kRadToDeg << " deg, el "
              << result.aod.elevation * kRadToDeg << " deg)\n"
              << "d_hat = " << result.distance_hat_m << " m\n"
              << "v_hat = " << result.velocity_hat_mps << " m/s\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"RIS-aided FMCW radar self-localization: simulate, estimate, study"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 1;
    std::string trim_spec;

    // simulate: scenario -> capture cube pair (<out>.bin / <out>.json)
    auto *simulate = app.add_subcommand("simulate", "Synthesize a beat-signal cube");
    simulate->add_option("--config", config_path, "Scenario JSON (defaults if omitted)");
    simulate->add_option("--seed", seed, "Random seed");
    simulate->add_option("--out", out_path, "Output path prefix")->required();

    // estimate: cube pair -> sweep result CSV
    std::string cube_prefix;
    auto *estimate_cmd = app.add_subcommand("estimate", "Run the estimation pipeline on a cube");
    estimate_cmd->add_option("cube", cube_prefix, "Cube path prefix (expects .bin/.json)")
        ->required();
    estimate_cmd->add_option("--config", config_path, "Scenario JSON for pipeline settings");
    estimate_cmd->add_option("--trim", trim_spec, "Keep frames <first>:<last> (inclusive)");
    estimate_cmd->add_option("--out", out_path, "Sweep result CSV")->required();

    // diagnose: scenario -> map/beam/distance-profile CSVs
    auto *diagnose = app.add_subcommand("diagnose", "Single-run spectrum diagnostics");
    diagnose->add_option("--config", config_path, "Scenario JSON (defaults if omitted)");
    diagnose->add_option("--seed", seed, "Random seed");
    diagnose->add_option("--out", out_path, "Output prefix for the three CSVs")->required();

    // study: Monte Carlo sweep -> MAE CSV
    std::string sweep_param = "tx_power";
    std::string values;
    int runs = 1000;
    bool randomize_aod = false;
    std::string records_path;
    auto *study_cmd = app.add_subcommand("study", "Monte Carlo parameter sweep");
    study_cmd->add_option("--config", config_path, "Base scenario JSON (defaults if omitted)");
    study_cmd
        ->add_option("--sweep-param", sweep_param,
                     "Swept parameter: tx_power | beam_step | n_ris_elements")
        ->check(CLI::IsMember({"tx_power", "beam_step", "n_ris_elements"}));
    study_cmd->add_option("--values", values, "Comma-separated swept values")->required();
    study_cmd->add_option("--runs", runs, "Monte Carlo runs per value");
    study_cmd->add_option("--seed", seed, "Master seed");
    study_cmd->add_flag("--randomize-aod", randomize_aod,
                        "Draw the true AOD uniformly over the sweep range per run");
    study_cmd->add_option("--records", records_path, "Also write per-run records CSV");
    study_cmd->add_option("--out", out_path, "Study MAE CSV")->required();

    // ingest: raw capture pair -> trimmed capture pair
    std::string data_path, meta_path;
    auto *ingest = app.add_subcommand("ingest", "Validate/trim a raw capture");
    ingest->add_option("data", data_path, "Raw int16 I/Q data file")->required();
    ingest->add_option("meta", meta_path, "Sidecar metadata JSON")->required();
    ingest->add_option("--trim", trim_spec, "Keep frames <first>:<last> (inclusive)");
    ingest->add_option("--out", out_path, "Output path prefix")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (simulate->parsed())
        {
            const ScenarioConfig cfg = load_or_default(config_path);
            const BeatCube cube = synthesize(cfg, seed);
            const CaptureMeta meta =
                export_capture(cube, out_path + ".bin", out_path + ".json");
            std::cout << "wrote " << out_path << ".bin (" << meta.n_frames
                      << " frames, scale " << meta.scale << ") and " << out_path << ".json\n";
        }
        else if (estimate_cmd->parsed())
        {
            const ScenarioConfig cfg = load_or_default(config_path);
            std::optional<FrameRange> trim;
            if (!trim_spec.empty())
                trim = parse_trim(trim_spec);
            const BeatCube cube =
                ingest_capture(cube_prefix + ".bin", cube_prefix + ".json", trim);
            const SweepResult result = estimate(cube, cfg.pipeline_config());
            emit_sweep_csv(result, cube.plan, out_path);
            print_summary(result);
            const LocalizationEstimate est =
                make_estimate(result, cfg.geometry.ris_position, cfg.ris_orientation());
            std::cout << "x_hat = [" << est.position.x() << ", " << est.position.y() << ", "
                      << est.position.z() << "] m\n";
        }
        else if (diagnose->parsed())
        {
            const ScenarioConfig cfg = load_or_default(config_path);
            const DiagnosticsBundle bundle = diagnostic_run(cfg, seed);
            emit_diagnostics_csv(bundle, out_path);
            print_summary(bundle.result);
            std::cout << "wrote " << out_path << "_{map,beam_profile,distance_profile}.csv\n";
        }
        else if (study_cmd->parsed())
        {
            SweepStudy study;
            study.base = load_or_default(config_path);
            if (sweep_param == "tx_power")
                study.parameter = SweptParameter::tx_power;
            else if (sweep_param == "beam_step")
                study.parameter = SweptParameter::beam_step;
            else
                study.parameter = SweptParameter::n_ris_elements;
            study.values = parse_study_values(study.parameter, values);
            study.runs_per_point = runs;
            study.master_seed = seed;
            study.randomize_aod = randomize_aod;
            study.keep_records = !records_path.empty();

            const StudyResult result = run_study(study);
            emit_study_csv(result, out_path);
            if (!records_path.empty())
                emit_run_records_csv(result, records_path);
            for (const auto &p : result.points)
                std::cout << to_string(result.parameter) << "=" << p.point.value
                          << (p.failure.empty()
                                  ? "  position MAE " + csv::format_double(p.position.mae) + " m"
                                  : "  FAILED: " + p.failure)
                          << "\n";
        }
        else if (ingest->parsed())
        {
            std::optional<FrameRange> trim;
            if (!trim_spec.empty())
                trim = parse_trim(trim_spec);
            const BeatCube cube = ingest_capture(data_path, meta_path, trim);
            const CaptureMeta meta =
                export_capture(cube, out_path + ".bin", out_path + ".json");
            std::cout << "wrote " << out_path << ".bin (" << meta.n_frames << " frames) and "
                      << out_path << ".json\n";
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
