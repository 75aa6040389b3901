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

#include "risloc/experiments.hpp"

#include "risloc/random.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace risloc {

const char *to_string(SweptParameter p)
{
    switch (p)
    {
    case SweptParameter::tx_power:
        return "tx_power";
    case SweptParameter::beam_step:
        return "beam_step";
    case SweptParameter::n_ris_elements:
        return "n_ris_elements";
    }
    return "unknown";
}

StudyPoint element_count_point(int count)
{
    switch (count)
    {
    case 16:
        return {16.0, 4, 4};
    case 64:
        return {64.0, 16, 4};
    case 256:
        return {256.0, 16, 16};
    default:
        throw std::invalid_argument(
            "element_count_point: no pinned shape for this count; give explicit az x el dims");
    }
}

ScenarioConfig derive_scenario(const ScenarioConfig &base, SweptParameter parameter,
                               const StudyPoint &point)
{
    ScenarioConfig derived = base;
    switch (parameter)
    {
    case SweptParameter::tx_power:
        derived.budget.tx_power_dbm = point.value;
        break;
    case SweptParameter::beam_step:
        derived.sweep.az_step_deg = point.value;
        break;
    case SweptParameter::n_ris_elements:
        if (point.n_az < 1 || point.n_el < 1)
            throw std::invalid_argument("element-count study point lacks array dims");
        derived.geometry.ris_n_az = point.n_az;
        derived.geometry.ris_n_el = point.n_el;
        break;
    }
    derived.validate();
    return derived;
}

std::uint64_t study_run_seed(std::uint64_t master_seed, std::size_t point_index, int run)
{
    // Offsets are unique per (point, run), so the seeds are pairwise
    // distinct; downstream consumers mix them further.
    return mix_seed(master_seed) + (static_cast<std::uint64_t>(point_index) << 32) +
           static_cast<std::uint64_t>(run);
}

namespace {

ErrorStat reduce_stat(const std::vector<double> &abs_errors)
{
    const std::size_t n = abs_errors.size();
    ErrorStat stat;
    if (n == 0)
        return stat;
    double sum = 0.0;
    for (double e : abs_errors)
        sum += e;
    stat.mae = sum / static_cast<double>(n);
    if (n > 1)
    {
        double ss = 0.0;
        for (double e : abs_errors)
            ss += (e - stat.mae) * (e - stat.mae);
        stat.std_error = std::sqrt(ss / static_cast<double>(n - 1)) /
                         std::sqrt(static_cast<double>(n));
    }
    return stat;
}

} // namespace

StudyResult run_study(const SweepStudy &study)
{
    if (study.values.empty())
        throw std::invalid_argument("run_study: no swept values");
    if (study.runs_per_point < 1)
        throw std::invalid_argument("run_study: runs_per_point must be >= 1");

    StudyResult result;
    result.parameter = study.parameter;
    result.points.resize(study.values.size());

    unsigned n_threads = study.threads > 0 ? static_cast<unsigned>(study.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(study.runs_per_point));

    for (std::size_t pi = 0; pi < study.values.size(); ++pi)
    {
        PointResult &point_result = result.points[pi];
        point_result.point = study.values[pi];

        ScenarioConfig derived;
        try
        {
            derived = derive_scenario(study.base, study.parameter, study.values[pi]);
        }
        catch (const std::exception &e)
        {
            point_result.failure = e.what();
            continue; // an invalid point must not abort the study
        }

        const Position3 ris_pos = derived.geometry.ris_position;
        const Orientation orient = derived.ris_orientation();
        const double base_distance = derived.ue_distance_m();

        // Single-threaded pipeline inside each run; parallelism lives here.
        PipelineConfig pipeline = derived.pipeline_config();
        pipeline.threads = 1;

        const int runs = study.runs_per_point;
        std::vector<RunRecord> records(static_cast<std::size_t>(runs));

        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&](unsigned tid)
        {
            try
            {
                for (int r = static_cast<int>(tid); r < runs; r += static_cast<int>(n_threads))
                {
                    const std::uint64_t seed = study_run_seed(study.master_seed, pi, r);

                    ScenarioConfig run_scenario = derived;
                    if (study.randomize_aod)
                    {
                        RandomStream aod_stream(sub_seed(seed, 0xa0dull));
                        const double az_deg = aod_stream.uniform(derived.sweep.az_start_deg,
                                                                 derived.sweep.az_stop_deg);
                        const Direction dir(az_deg * std::numbers::pi / 180.0,
                                            derived.sweep.el_deg * std::numbers::pi / 180.0);
                        run_scenario.geometry.ue_position =
                            direction_to_global(dir, base_distance, ris_pos, orient);
                    }

                    GroundTruth truth;
                    truth.ue_position = run_scenario.geometry.ue_position;
                    truth.distance_m = run_scenario.ue_distance_m();
                    truth.aod = run_scenario.true_aod();
                    truth.velocity_mps = 0.0;

                    const BeatCube cube = synthesize(run_scenario, seed);
                    const SweepResult sweep = estimate(cube, pipeline);
                    const LocalizationEstimate est = make_estimate(sweep, ris_pos, orient);

                    RunRecord &rec = records[static_cast<std::size_t>(r)];
                    rec.point_index = pi;
                    rec.run = r;
                    rec.seed = seed;
                    rec.true_azimuth_rad = truth.aod.azimuth;
                    rec.errors = error_report(est, truth);
                }
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };

        if (n_threads <= 1)
        {
            worker(0);
        }
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (unsigned t = 0; t < n_threads; ++t)
                pool.emplace_back(worker, t);
            for (auto &t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);

        std::vector<double> dist_err, ang_err, pos_err;
        dist_err.reserve(records.size());
        ang_err.reserve(records.size());
        pos_err.reserve(records.size());
        for (const auto &rec : records)
        {
            dist_err.push_back(rec.errors.distance_error_m);
            ang_err.push_back(rec.errors.angle_error_rad);
            pos_err.push_back(rec.errors.position_error_m);
        }
        point_result.completed_runs = runs;
        point_result.distance = reduce_stat(dist_err);
        point_result.angle = reduce_stat(ang_err);
        point_result.position = reduce_stat(pos_err);

        if (study.keep_records)
            result.records.insert(result.records.end(), records.begin(), records.end());
    }

    return result;
}

DiagnosticsBundle diagnostic_run(const ScenarioConfig &scenario, std::uint64_t seed)
{
    const BeatCube cube = synthesize(scenario, seed);
    const PipelineConfig pipeline = scenario.pipeline_config();

    DiagnosticsBundle bundle;
    bundle.result = estimate(cube, pipeline);
    bundle.plan = cube.plan;

    // Ungated spectrum at the selected angle; the gate only affects the
    // estimator's peak search, not what the diagnostics show.
    const auto &frame = cube.frame(bundle.result.selected);
    const WindowSpec spec_n{pipeline.window_n, static_cast<int>(frame.rows())};
    const WindowSpec spec_k{pipeline.window_k, static_cast<int>(frame.cols())};
    bundle.selected_map = delay_doppler_map(
        zero_pad(window_frame(frame, spec_n, spec_k), pipeline.plan), cube.waveform,
        pipeline.plan);

    const int n_dft = bundle.selected_map.n_dft();
    bundle.distance_axis_m.resize(n_dft);
    bundle.distance_profile.resize(n_dft);
    for (int n = 0; n < n_dft; ++n)
    {
        bundle.distance_axis_m[n] =
            bundle.selected_map.delay_at(n) * kSpeedOfLight / 2.0;
        bundle.distance_profile[n] = std::norm(bundle.selected_map.values(n, 0));
    }
    return bundle;
}

} // namespace risloc
