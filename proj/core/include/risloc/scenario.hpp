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

#pragma once

#include "risloc/channel.hpp"
#include "risloc/dsp.hpp"
#include "risloc/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace risloc {

/// Extra static or moving reflector beyond the structural RIS echo.
struct TargetSpec
{
    double distance_m = 0.0;
    double velocity_mps = 0.0;
    double rcs_m2 = 0.0;
};

/*!
 * Complete simulation scenario. Every default reproduces the reference
 * 60 GHz parameter set: 16x4 RIS at half-wavelength pitch 13.38 m from the
 * radar, 20 dBm transmit power, a -45..45 degree azimuth sweep in
 * 1.5-degree steps, and the 1199 x 4793 spectrum grid. The one deliberate
 * departure is the chirp duration (60 us, the span actually sampled at
 * T_s = 100 ns), which keeps the sampled sweep within the bandwidth.
 */
struct ScenarioConfig
{
    Waveform waveform;

    struct Sweep
    {
        double az_start_deg = -45.0;
        double az_stop_deg = 45.0;
        double az_step_deg = 1.5;
        double el_deg = 0.0;
    } sweep;

    struct Geometry
    {
        Position3 ue_position{0.0, 0.0, 0.0};
        Position3 ris_position{0.0, 13.38, 0.0};
        double ris_yaw_deg = 180.0; // boresight toward the radar
        int ris_n_az = 16;
        int ris_n_el = 4;
        double ris_element_spacing_m = 0.0025; // lambda / 2
    } geometry;

    struct Budget
    {
        double tx_power_dbm = 20.0;
        double combined_gain_dbi = 4.7712;
        double ris_loop_factor_db = 45.532;
        // Per-sample complex noise power; nullopt means exactly noiseless.
        std::optional<double> noise_power_dbm = -63.64;
    } budget;

    struct Paths
    {
        double structural_rcs_m2 = 19.0; // passive echo off the RIS hardware
        double loopback_delay_s = 1.78e-9;

        struct Leakage
        {
            bool enabled = false;
            double gain_sq_db = -100.0; // 10 log10 |gamma_leak|^2
            double delay_s = 0.667e-9;
        } leakage;

        std::vector<TargetSpec> targets;
    } paths;

    struct Pipeline
    {
        WindowKind window = WindowKind::hann;
        int n_dft = 1199;
        int k_dft = 4793;
        double delta_s = 0.33e-9;
        double min_gate_m = 1.0;
        int threads = 0;
    } pipeline;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    SweepPlan sweep_plan() const;
    ArrayLayout ris_layout() const;
    Orientation ris_orientation() const;
    LinkBudget link_budget() const;
    PipelineConfig pipeline_config() const;

    double ue_distance_m() const;
    Direction true_aod() const;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm) / 1000.0; }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

} // namespace risloc
