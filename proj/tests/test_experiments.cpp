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

#include <catch2/catch_amalgamated.hpp>

#include "risloc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace risloc;

namespace {

constexpr double kPi = std::numbers::pi;

// Small scenario for fast Monte Carlo unit tests: short chirps, coarse
// sweep, radar 4 m from the RIS so the beat stays inside the IF band.
ScenarioConfig small_scenario()
{
    ScenarioConfig cfg;
    cfg.waveform.samples_per_chirp = 128;
    cfg.waveform.chirps_per_frame = 8;
    cfg.waveform.chirp_duration_s = 128 * cfg.waveform.sample_period_s;
    cfg.sweep.az_step_deg = 3.0;
    cfg.geometry.ue_position = Position3(0.0, 9.38, 0.0);
    cfg.geometry.ris_element_spacing_m = 0.00125; // lambda/4: unambiguous sweep
    cfg.pipeline.n_dft = 256;
    cfg.pipeline.k_dft = 16;
    cfg.pipeline.threads = 1;
    cfg.validate();
    return cfg;
}

std::vector<double> dominant_peaks(const std::vector<double> &axis,
                                   const std::vector<double> &power, double min_separation)
{
    const double threshold = *std::max_element(power.begin(), power.end()) / 100.0;
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < power.size(); ++i)
        if (power[i] >= threshold && power[i] >= power[i - 1] && power[i] >= power[i + 1])
            maxima.push_back(i);
    std::sort(maxima.begin(), maxima.end(),
              [&](std::size_t a, std::size_t b) { return power[a] > power[b]; });

    std::vector<double> peaks;
    for (const std::size_t i : maxima)
    {
        bool isolated = true;
        for (const double p : peaks)
            if (std::abs(axis[i] - p) < min_separation)
                isolated = false;
        if (isolated)
            peaks.push_back(axis[i]);
    }
    std::sort(peaks.begin(), peaks.end());
    return peaks;
}

} // namespace

TEST_CASE("element count mapping follows the reference shapes")
{
    CHECK(element_count_point(16).n_az == 4);
    CHECK(element_count_point(16).n_el == 4);
    CHECK(element_count_point(64).n_az == 16);
    CHECK(element_count_point(64).n_el == 4);
    CHECK(element_count_point(256).n_az == 16);
    CHECK(element_count_point(256).n_el == 16);
    CHECK_THROWS_AS(element_count_point(32), std::invalid_argument);
}

TEST_CASE("derive_scenario adjusts exactly the swept parameter")
{
    const ScenarioConfig base = small_scenario();

    const ScenarioConfig power =
        derive_scenario(base, SweptParameter::tx_power, StudyPoint{5.0});
    CHECK(power.budget.tx_power_dbm == 5.0);
    CHECK(power.sweep.az_step_deg == base.sweep.az_step_deg);

    const ScenarioConfig step =
        derive_scenario(base, SweptParameter::beam_step, StudyPoint{1.5});
    CHECK(step.sweep.az_step_deg == 1.5);
    CHECK(step.sweep_plan().size() == 61);

    const ScenarioConfig dims =
        derive_scenario(base, SweptParameter::n_ris_elements, element_count_point(256));
    CHECK(dims.geometry.ris_n_az == 16);
    CHECK(dims.geometry.ris_n_el == 16);

    CHECK_THROWS_AS(derive_scenario(base, SweptParameter::beam_step, StudyPoint{-1.0}),
                    std::invalid_argument);
}

TEST_CASE("study seeds are pairwise distinct")
{
    std::set<std::uint64_t> seeds;
    for (std::size_t point = 0; point < 8; ++point)
        for (int run = 0; run < 500; ++run)
            seeds.insert(study_run_seed(123456789ull, point, run));
    CHECK(seeds.size() == 8u * 500u);
}

TEST_CASE("study: deterministic results and single-run aggregation")
{
    SweepStudy study;
    study.base = small_scenario();
    study.parameter = SweptParameter::tx_power;
    study.values = {StudyPoint{20.0}, StudyPoint{10.0}};
    study.runs_per_point = 3;
    study.master_seed = 7;
    study.keep_records = true;
    study.threads = 2;

    const StudyResult r1 = run_study(study);
    const StudyResult r2 = run_study(study);
    REQUIRE(r1.points.size() == 2);
    REQUIRE(r1.records.size() == 6);
    for (std::size_t i = 0; i < r1.points.size(); ++i)
    {
        CHECK(r1.points[i].distance.mae == r2.points[i].distance.mae);
        CHECK(r1.points[i].angle.mae == r2.points[i].angle.mae);
        CHECK(r1.points[i].position.mae == r2.points[i].position.mae);
    }
    for (std::size_t i = 0; i < r1.records.size(); ++i)
        CHECK(r1.records[i].errors.position_error_m == r2.records[i].errors.position_error_m);

    // A noiseless single-run study reports the run's errors as the MAE.
    SweepStudy single = study;
    single.base.budget.noise_power_dbm.reset();
    single.values = {StudyPoint{20.0}};
    single.runs_per_point = 1;
    const StudyResult rs = run_study(single);
    REQUIRE(rs.records.size() == 1);
    CHECK(rs.points[0].distance.mae == rs.records[0].errors.distance_error_m);
    CHECK(rs.points[0].position.mae == rs.records[0].errors.position_error_m);
    CHECK(rs.points[0].distance.std_error == 0.0);
}

TEST_CASE("study: invalid point is reported without aborting")
{
    SweepStudy study;
    study.base = small_scenario();
    study.parameter = SweptParameter::beam_step;
    study.values = {StudyPoint{3.0}, StudyPoint{-2.0}};
    study.runs_per_point = 1;

    const StudyResult result = run_study(study);
    REQUIRE(result.points.size() == 2);
    CHECK(result.points[0].failure.empty());
    CHECK(result.points[0].completed_runs == 1);
    CHECK_FALSE(result.points[1].failure.empty());
    CHECK(result.points[1].completed_runs == 0);
}

TEST_CASE("study: noiseless randomized-AOD errors sit on the quantization floors")
{
    SweepStudy study;
    study.base = small_scenario();
    study.base.budget.noise_power_dbm.reset();
    study.parameter = SweptParameter::tx_power;
    study.values = {StudyPoint{20.0}};
    study.runs_per_point = 24;
    study.randomize_aod = true;
    study.master_seed = 99;
    study.threads = 2;

    const StudyResult result = run_study(study);
    const PointResult &p = result.points[0];

    const auto &wf = study.base.waveform;
    const double bin_distance = kSpeedOfLight / (2.0 * wf.slope() *
                                                 study.base.pipeline.n_dft *
                                                 wf.sample_period_s);
    CHECK(p.distance.mae <= bin_distance / 2.0 + 1e-12);
    CHECK(p.angle.mae <= 0.5 * study.base.sweep.az_step_deg * kPi / 180.0 + 1e-12);
}

TEST_CASE("diagnostics: structural and retransmitted peaks, beam profile maximum")
{
    ScenarioConfig cfg; // full reference scene, reduced Doppler padding
    cfg.pipeline.k_dft = 160;
    cfg.pipeline.threads = 2;
    cfg.validate();

    const DiagnosticsBundle bundle = diagnostic_run(cfg, 11);

    // Fig.-4-style: exactly two dominant peaks, structural at d0 and the
    // retransmission at d0 + tau_RB c / 2.
    const double resolution = kSpeedOfLight / (2.0 * cfg.waveform.bandwidth_hz);
    const auto peaks =
        dominant_peaks(bundle.distance_axis_m, bundle.distance_profile, resolution);
    REQUIRE(peaks.size() == 2);
    const double bin_distance = bundle.selected_map.delay_bin_s * kSpeedOfLight / 2.0;
    CHECK(std::abs(peaks[0] - 13.38) <= bin_distance);
    CHECK(std::abs(peaks[1] - (13.38 + 1.78e-9 * kSpeedOfLight / 2.0)) <= bin_distance);
    CHECK(peaks[1] - peaks[0] > resolution);

    // The average-power profile is maximized at the sweep angle nearest
    // the true AOD (boresight is exactly on the grid).
    CHECK(bundle.result.aod.azimuth == 0.0);
    CHECK(bundle.result.selected == 30);

    // With leakage enabled the ungated map shows a third, near-zero peak,
    // while the gated estimate still reports the RIS distance.
    ScenarioConfig leaky = cfg;
    leaky.paths.leakage.enabled = true;
    const DiagnosticsBundle three = diagnostic_run(leaky, 11);
    const auto peaks3 =
        dominant_peaks(three.distance_axis_m, three.distance_profile, resolution);
    REQUIRE(peaks3.size() == 3);
    CHECK(peaks3[0] < 1.0);
    CHECK(std::abs(three.result.distance_hat_m - 13.38) <= bin_distance);
}
