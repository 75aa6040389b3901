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

#include "risloc/localization.hpp"
#include "risloc/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace risloc {

enum class SweptParameter
{
    tx_power,       // dBm
    beam_step,      // degrees
    n_ris_elements, // total element count with explicit az x el dims
};

const char *to_string(SweptParameter p);

struct StudyPoint
{
    double value = 0.0;
    // Array dims for the element-count study; ignored otherwise.
    int n_az = 0;
    int n_el = 0;
};

/// Maps an element count to the array dims used by the reference
/// evaluation: 16 -> 4x4, 64 -> 16x4, 256 -> 16x16. Throws for counts
/// without a pinned shape (give explicit dims instead).
StudyPoint element_count_point(int count);

struct SweepStudy
{
    SweptParameter parameter = SweptParameter::tx_power;
    std::vector<StudyPoint> values;
    int runs_per_point = 1000;
    ScenarioConfig base;
    std::uint64_t master_seed = 1;
    /// Draw the true AOD azimuth uniformly over the sweep range per run
    /// instead of keeping the configured geometry.
    bool randomize_aod = false;
    bool keep_records = false;
    int threads = 0; // 0 = hardware concurrency
};

struct ErrorStat
{
    double mae = 0.0;
    double std_error = 0.0;
};

struct PointResult
{
    StudyPoint point;
    int completed_runs = 0;
    std::string failure; // non-empty if the derived scenario was invalid
    ErrorStat distance;
    ErrorStat angle;
    ErrorStat position;
};

struct RunRecord
{
    std::size_t point_index = 0;
    int run = 0;
    std::uint64_t seed = 0;
    double true_azimuth_rad = 0.0;
    ErrorReport errors;
};

struct StudyResult
{
    SweptParameter parameter = SweptParameter::tx_power;
    std::vector<PointResult> points;
    std::vector<RunRecord> records; // populated when keep_records is set
};

/// Derives the per-point scenario for a study (exposed for tests).
ScenarioConfig derive_scenario(const ScenarioConfig &base, SweptParameter parameter,
                               const StudyPoint &point);

/// Per-run seed; pairwise distinct across (point, run) by construction.
std::uint64_t study_run_seed(std::uint64_t master_seed, std::size_t point_index, int run);

/*!
 * Monte Carlo sweep: for every point value and run, derives the scenario,
 * synthesizes a cube, runs the estimation pipeline, localizes, and
 * aggregates mean absolute errors with standard errors. Fully
 * deterministic for a given master seed; runs execute in parallel and are
 * reduced in index order. A point whose derived scenario fails validation
 * is reported through its failure field without aborting the study.
 */
StudyResult run_study(const SweepStudy &study);

/// Single-run diagnostics: the (ungated) delay-Doppler magnitude map at
/// the selected sweep angle, the per-angle average-power profile, and the
/// 1D distance profile at the zero-Doppler row.
struct DiagnosticsBundle
{
    SweepResult result;
    SweepPlan plan;
    DelayDopplerMap selected_map;
    std::vector<double> distance_axis_m;  // raw tau c / 2
    std::vector<double> distance_profile; // |z(tau, nu = 0)|^2
};

DiagnosticsBundle diagnostic_run(const ScenarioConfig &scenario, std::uint64_t seed);

} // namespace risloc
