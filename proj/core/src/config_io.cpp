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

#include "risloc/config_io.hpp"

#include "io_detail.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risloc {

using nlohmann::json;

namespace {

void check_keys(const json &obj, const std::string &path,
                std::initializer_list<const char *> allowed)
{
    if (!obj.is_object())
        throw std::invalid_argument(path.empty() ? std::string("config root must be an object")
                                                 : path + " must be an object");
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const char *k : allowed)
            if (item.key() == k)
            {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("unknown config field: " + path + item.key());
    }
}

template <typename T>
void read_field(const json &obj, const std::string &path, const char *key, T &out)
{
    if (!obj.contains(key))
        return;
    try
    {
        obj.at(key).get_to(out);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument("config field " + path + key + ": " + e.what());
    }
}

void read_position(const json &obj, const std::string &path, const char *key, Position3 &out)
{
    if (!obj.contains(key))
        return;
    const auto &arr = obj.at(key);
    if (!arr.is_array() || arr.size() != 3)
        throw std::invalid_argument("config field " + path + key +
                                    " must be an array of 3 numbers");
    for (int i = 0; i < 3; ++i)
    {
        try
        {
            out[i] = arr.at(i).get<double>();
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument("config field " + path + key + ": " + e.what());
        }
    }
}

void parse_waveform(const json &obj, Waveform &wf)
{
    const std::string path = "waveform.";
    check_keys(obj, path,
               {"carrier_freq_hz", "wavelength_m", "bandwidth_hz", "chirp_duration_s",
                "sample_period_s", "samples_per_chirp", "chirps_per_frame"});
    read_field(obj, path, "carrier_freq_hz", wf.carrier_freq_hz);
    read_field(obj, path, "wavelength_m", wf.wavelength_m);
    read_field(obj, path, "bandwidth_hz", wf.bandwidth_hz);
    read_field(obj, path, "chirp_duration_s", wf.chirp_duration_s);
    read_field(obj, path, "sample_period_s", wf.sample_period_s);
    read_field(obj, path, "samples_per_chirp", wf.samples_per_chirp);
    read_field(obj, path, "chirps_per_frame", wf.chirps_per_frame);
}

WindowKind parse_window_kind(const std::string &name)
{
    if (name == "hann")
        return WindowKind::hann;
    if (name == "rectangular")
        return WindowKind::rectangular;
    throw std::invalid_argument("config field pipeline.window: unknown window '" + name + "'");
}

const char *window_kind_name(WindowKind kind)
{
    return kind == WindowKind::hann ? "hann" : "rectangular";
}

} // namespace

ScenarioConfig parse_config(const std::string &json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }

    ScenarioConfig cfg;
    check_keys(root, "", {"waveform", "sweep", "geometry", "link_budget", "paths", "pipeline"});

    if (root.contains("waveform"))
        parse_waveform(root.at("waveform"), cfg.waveform);

    if (root.contains("sweep"))
    {
        const auto &obj = root.at("sweep");
        const std::string path = "sweep.";
        check_keys(obj, path, {"az_start_deg", "az_stop_deg", "az_step_deg", "el_deg"});
        read_field(obj, path, "az_start_deg", cfg.sweep.az_start_deg);
        read_field(obj, path, "az_stop_deg", cfg.sweep.az_stop_deg);
        read_field(obj, path, "az_step_deg", cfg.sweep.az_step_deg);
        read_field(obj, path, "el_deg", cfg.sweep.el_deg);
    }

    if (root.contains("geometry"))
    {
        const auto &obj = root.at("geometry");
        const std::string path = "geometry.";
        check_keys(obj, path,
                   {"ue_position_m", "ris_position_m", "ris_yaw_deg", "ris_n_az", "ris_n_el",
                    "ris_element_spacing_m"});
        read_position(obj, path, "ue_position_m", cfg.geometry.ue_position);
        read_position(obj, path, "ris_position_m", cfg.geometry.ris_position);
        read_field(obj, path, "ris_yaw_deg", cfg.geometry.ris_yaw_deg);
        read_field(obj, path, "ris_n_az", cfg.geometry.ris_n_az);
        read_field(obj, path, "ris_n_el", cfg.geometry.ris_n_el);
        read_field(obj, path, "ris_element_spacing_m", cfg.geometry.ris_element_spacing_m);
    }

    if (root.contains("link_budget"))
    {
        const auto &obj = root.at("link_budget");
        const std::string path = "link_budget.";
        check_keys(obj, path,
                   {"tx_power_dbm", "combined_gain_dbi", "ris_loop_factor_db",
                    "noise_power_dbm"});
        read_field(obj, path, "tx_power_dbm", cfg.budget.tx_power_dbm);
        read_field(obj, path, "combined_gain_dbi", cfg.budget.combined_gain_dbi);
        read_field(obj, path, "ris_loop_factor_db", cfg.budget.ris_loop_factor_db);
        if (obj.contains("noise_power_dbm"))
        {
            // null expresses an exactly noiseless scenario.
            if (obj.at("noise_power_dbm").is_null())
                cfg.budget.noise_power_dbm.reset();
            else
            {
                double v = 0.0;
                read_field(obj, path, "noise_power_dbm", v);
                cfg.budget.noise_power_dbm = v;
            }
        }
    }

    if (root.contains("paths"))
    {
        const auto &obj = root.at("paths");
        const std::string path = "paths.";
        check_keys(obj, path, {"structural_rcs_m2", "loopback_delay_s", "leakage", "targets"});
        read_field(obj, path, "structural_rcs_m2", cfg.paths.structural_rcs_m2);
        read_field(obj, path, "loopback_delay_s", cfg.paths.loopback_delay_s);
        if (obj.contains("leakage"))
        {
            const auto &leak = obj.at("leakage");
            const std::string lpath = "paths.leakage.";
            check_keys(leak, lpath, {"enabled", "gain_sq_db", "delay_s"});
            read_field(leak, lpath, "enabled", cfg.paths.leakage.enabled);
            read_field(leak, lpath, "gain_sq_db", cfg.paths.leakage.gain_sq_db);
            read_field(leak, lpath, "delay_s", cfg.paths.leakage.delay_s);
        }
        if (obj.contains("targets"))
        {
            const auto &targets = obj.at("targets");
            if (!targets.is_array())
                throw std::invalid_argument("config field paths.targets must be an array");
            cfg.paths.targets.clear();
            for (std::size_t i = 0; i < targets.size(); ++i)
            {
                const std::string tpath = "paths.targets[" + std::to_string(i) + "].";
                check_keys(targets.at(i), tpath, {"distance_m", "velocity_mps", "rcs_m2"});
                TargetSpec t;
                read_field(targets.at(i), tpath, "distance_m", t.distance_m);
                read_field(targets.at(i), tpath, "velocity_mps", t.velocity_mps);
                read_field(targets.at(i), tpath, "rcs_m2", t.rcs_m2);
                cfg.paths.targets.push_back(t);
            }
        }
    }

    if (root.contains("pipeline"))
    {
        const auto &obj = root.at("pipeline");
        const std::string path = "pipeline.";
        check_keys(obj, path,
                   {"window", "n_dft", "k_dft", "delta_s", "min_gate_m", "threads"});
        if (obj.contains("window"))
        {
            std::string name;
            read_field(obj, path, "window", name);
            cfg.pipeline.window = parse_window_kind(name);
        }
        read_field(obj, path, "n_dft", cfg.pipeline.n_dft);
        read_field(obj, path, "k_dft", cfg.pipeline.k_dft);
        read_field(obj, path, "delta_s", cfg.pipeline.delta_s);
        read_field(obj, path, "min_gate_m", cfg.pipeline.min_gate_m);
        read_field(obj, path, "threads", cfg.pipeline.threads);
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(const ScenarioConfig &cfg)
{
    json root;

    root["waveform"] = {{"carrier_freq_hz", cfg.waveform.carrier_freq_hz},
                        {"wavelength_m", cfg.waveform.wavelength_m},
                        {"bandwidth_hz", cfg.waveform.bandwidth_hz},
                        {"chirp_duration_s", cfg.waveform.chirp_duration_s},
                        {"sample_period_s", cfg.waveform.sample_period_s},
                        {"samples_per_chirp", cfg.waveform.samples_per_chirp},
                        {"chirps_per_frame", cfg.waveform.chirps_per_frame}};

    root["sweep"] = {{"az_start_deg", cfg.sweep.az_start_deg},
                     {"az_stop_deg", cfg.sweep.az_stop_deg},
                     {"az_step_deg", cfg.sweep.az_step_deg},
                     {"el_deg", cfg.sweep.el_deg}};

    root["geometry"] = {{"ue_position_m", {cfg.geometry.ue_position.x(),
                                           cfg.geometry.ue_position.y(),
                                           cfg.geometry.ue_position.z()}},
                        {"ris_position_m", {cfg.geometry.ris_position.x(),
                                            cfg.geometry.ris_position.y(),
                                            cfg.geometry.ris_position.z()}},
                        {"ris_yaw_deg", cfg.geometry.ris_yaw_deg},
                        {"ris_n_az", cfg.geometry.ris_n_az},
                        {"ris_n_el", cfg.geometry.ris_n_el},
                        {"ris_element_spacing_m", cfg.geometry.ris_element_spacing_m}};

    root["link_budget"] = {{"tx_power_dbm", cfg.budget.tx_power_dbm},
                           {"combined_gain_dbi", cfg.budget.combined_gain_dbi},
                           {"ris_loop_factor_db", cfg.budget.ris_loop_factor_db}};
    if (cfg.budget.noise_power_dbm)
        root["link_budget"]["noise_power_dbm"] = *cfg.budget.noise_power_dbm;
    else
        root["link_budget"]["noise_power_dbm"] = nullptr;

    root["paths"] = {{"structural_rcs_m2", cfg.paths.structural_rcs_m2},
                     {"loopback_delay_s", cfg.paths.loopback_delay_s},
                     {"leakage",
                      {{"enabled", cfg.paths.leakage.enabled},
                       {"gain_sq_db", cfg.paths.leakage.gain_sq_db},
                       {"delay_s", cfg.paths.leakage.delay_s}}}};
    json targets = json::array();
    for (const auto &t : cfg.paths.targets)
        targets.push_back({{"distance_m", t.distance_m},
                           {"velocity_mps", t.velocity_mps},
                           {"rcs_m2", t.rcs_m2}});
    root["paths"]["targets"] = targets;

    root["pipeline"] = {{"window", window_kind_name(cfg.pipeline.window)},
                        {"n_dft", cfg.pipeline.n_dft},
                        {"k_dft", cfg.pipeline.k_dft},
                        {"delta_s", cfg.pipeline.delta_s},
                        {"min_gate_m", cfg.pipeline.min_gate_m},
                        {"threads", cfg.pipeline.threads}};

    return root.dump(2) + "\n";
}

void save_config(const ScenarioConfig &config, const std::filesystem::path &path)
{
    io_detail::write_file_atomic(path, config_to_json(config));
}

} // namespace risloc
