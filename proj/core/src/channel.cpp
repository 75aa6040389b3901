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

#include "risloc/channel.hpp"

#include "risloc/random.hpp"
#include "risloc/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risloc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double v, const char *what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
}
} // namespace

void Waveform::validate() const
{
    require_positive(carrier_freq_hz, "waveform.carrier_freq_hz");
    require_positive(wavelength_m, "waveform.wavelength_m");
    require_positive(bandwidth_hz, "waveform.bandwidth_hz");
    require_positive(chirp_duration_s, "waveform.chirp_duration_s");
    require_positive(sample_period_s, "waveform.sample_period_s");
    if (samples_per_chirp < 1)
        throw std::invalid_argument("waveform.samples_per_chirp must be >= 1");
    if (chirps_per_frame < 1)
        throw std::invalid_argument("waveform.chirps_per_frame must be >= 1");

    const double sampled_sweep = slope() * samples_per_chirp * sample_period_s;
    if (sampled_sweep > bandwidth_hz * (1.0 + 1e-12))
        throw std::invalid_argument(
            "waveform: sampled sweep S*N*T_s exceeds the bandwidth (chirp shorter than "
            "the sampling span)");

    const double nominal = kSpeedOfLight / carrier_freq_hz;
    if (std::abs(wavelength_m - nominal) > 0.01 * nominal)
        throw std::invalid_argument("waveform.wavelength_m inconsistent with carrier_freq_hz");
}

double PathSpec::delay_s() const
{
    double tau = 2.0 * distance_m / kSpeedOfLight;
    if (kind == PathKind::ris_loopback)
        tau += loopback_delay_s;
    return tau;
}

void LinkBudget::validate() const
{
    for (auto [v, name] : {std::pair{tx_power_w, "budget.tx_power_w"},
                           std::pair{combined_gain, "budget.combined_gain"},
                           std::pair{ris_loop_factor, "budget.ris_loop_factor"},
                           std::pair{noise_power_w, "budget.noise_power_w"}})
    {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be non-negative and finite");
    }
}

void BeatCube::validate() const
{
    if (frames.size() != plan.size())
        throw std::invalid_argument("cube: frame count does not match the sweep plan");
    for (const auto &f : frames)
    {
        if (f.rows() != waveform.samples_per_chirp || f.cols() != waveform.chirps_per_frame)
            throw std::invalid_argument("cube: frame shape does not match the waveform");
        if (!f.allFinite())
            throw std::invalid_argument("cube: non-finite samples");
    }
}

double target_gain_sq(const LinkBudget &budget, double rcs_m2, double distance_m,
                      double wavelength_m)
{
    budget.validate();
    require_positive(distance_m, "target distance");
    require_positive(wavelength_m, "wavelength");
    if (rcs_m2 < 0.0 || !std::isfinite(rcs_m2))
        throw std::invalid_argument("rcs must be non-negative and finite");

    const double four_pi = 4.0 * std::numbers::pi;
    return budget.tx_power_w * budget.combined_gain * rcs_m2 * wavelength_m * wavelength_m /
           (four_pi * four_pi * four_pi * std::pow(distance_m, 4));
}

double ris_loopback_gain_sq(const LinkBudget &budget, double d0_m, double wavelength_m)
{
    budget.validate();
    require_positive(d0_m, "RIS distance");
    require_positive(wavelength_m, "wavelength");

    const double one_way = std::pow(wavelength_m / (4.0 * std::numbers::pi * d0_m), 2);
    return budget.tx_power_w * budget.combined_gain * budget.ris_loop_factor * one_way * one_way;
}

namespace {

// frame += amplitude * u v^T with u_n = e^{-j 2 pi (S tau + f_c nu) n T_s}
// and v_k = e^{-j 2 pi f_c nu k T}.
void add_path_tone(Eigen::MatrixXcd &frame, const Waveform &wf, double tau, double nu,
                   std::complex<double> amplitude)
{
    const int n_samples = static_cast<int>(frame.rows());
    const int n_chirps = static_cast<int>(frame.cols());

    const double fast_freq = wf.slope() * tau + wf.carrier_freq_hz * nu; // beat tone, Hz
    const double slow_freq = wf.carrier_freq_hz * nu;                    // Doppler tone, Hz

    Eigen::VectorXcd u(n_samples);
    for (int n = 0; n < n_samples; ++n)
        u[n] = std::polar(1.0, -kTwoPi * fast_freq * n * wf.sample_period_s);
    Eigen::VectorXcd v(n_chirps);
    for (int k = 0; k < n_chirps; ++k)
        v[k] = std::polar(1.0, -kTwoPi * slow_freq * k * wf.chirp_duration_s);

    frame.noalias() += amplitude * u * v.transpose();
}

} // namespace

BeatCube synthesize_scene(const SceneModel &scene, std::uint64_t seed)
{
    scene.waveform.validate();
    if (scene.plan.size() == 0)
        throw std::invalid_argument("scene: sweep plan is empty");
    if (scene.noise_power_w < 0.0 || !std::isfinite(scene.noise_power_w))
        throw std::invalid_argument("scene: noise power must be non-negative and finite");
    for (const auto &p : scene.paths)
    {
        if (!std::isfinite(p.gain_sq) || p.gain_sq < 0.0)
            throw std::invalid_argument("scene: path gain_sq must be non-negative and finite");
        if (!std::isfinite(p.phase_rad) || !std::isfinite(p.radial_velocity_mps))
            throw std::invalid_argument("scene: non-finite path parameter");
        if (p.distance_m < 0.0)
            throw std::invalid_argument("scene: path distance must be non-negative");
    }
    const bool has_ris_path = std::any_of(scene.paths.begin(), scene.paths.end(),
                                          [](const PathSpec &p)
                                          { return p.kind == PathKind::ris_loopback; });
    if (has_ris_path && scene.layout.size() == 0)
        throw std::invalid_argument("scene: RIS path requires a non-empty array layout");

    const int n_samples = scene.waveform.samples_per_chirp;
    const int n_chirps = scene.waveform.chirps_per_frame;
    const std::size_t n_angles = scene.plan.size();

    // Retro array factor per sweep angle, shared by every RIS path.
    std::vector<std::complex<double>> beam(n_angles, std::complex<double>(1.0, 0.0));
    if (has_ris_path)
        for (std::size_t m = 0; m < n_angles; ++m)
            beam[m] = beam_response(scene.layout, scene.aod, scene.plan.angles[m],
                                    scene.waveform.wavelength_m);

    BeatCube cube;
    cube.waveform = scene.waveform;
    cube.plan = scene.plan;
    cube.frames.resize(n_angles);

    for (std::size_t m = 0; m < n_angles; ++m)
    {
        Eigen::MatrixXcd &frame = cube.frames[m];
        frame.setZero(n_samples, n_chirps);

        if (scene.noise_power_w > 0.0)
        {
            RandomStream noise(sub_seed(seed, m));
            auto *data = frame.data();
            const Eigen::Index count = frame.size();
            for (Eigen::Index i = 0; i < count; ++i)
                data[i] = noise.complex_gaussian(scene.noise_power_w);
        }

        for (const auto &path : scene.paths)
        {
            if (path.gain_sq == 0.0)
                continue;
            std::complex<double> amp = std::polar(std::sqrt(path.gain_sq), path.phase_rad);
            if (path.kind == PathKind::ris_loopback)
                amp *= beam[m];
            add_path_tone(frame, scene.waveform, path.delay_s(), path.doppler(), amp);
        }
    }
    return cube;
}

SceneModel build_scene(const ScenarioConfig &scenario, std::uint64_t seed)
{
    scenario.validate();

    SceneModel scene;
    scene.waveform = scenario.waveform;
    scene.plan = scenario.sweep_plan();
    scene.layout = scenario.ris_layout();
    scene.aod = scenario.true_aod();

    const LinkBudget budget = scenario.link_budget();
    scene.noise_power_w = budget.noise_power_w;

    const double lambda = scenario.waveform.wavelength_m;
    const double d0 = scenario.ue_distance_m();

    // Path phases are uniform per run, drawn from a stream separate from
    // the per-angle noise streams.
    RandomStream phases(sub_seed(seed, 0xfa5e5ull));

    PathSpec loopback;
    loopback.kind = PathKind::ris_loopback;
    loopback.distance_m = d0;
    loopback.gain_sq = ris_loopback_gain_sq(budget, d0, lambda);
    loopback.loopback_delay_s = scenario.paths.loopback_delay_s;
    loopback.phase_rad = phases.uniform(0.0, kTwoPi);
    scene.paths.push_back(loopback);

    if (scenario.paths.structural_rcs_m2 > 0.0)
    {
        PathSpec structural;
        structural.kind = PathKind::target;
        structural.distance_m = d0;
        structural.gain_sq = target_gain_sq(budget, scenario.paths.structural_rcs_m2, d0, lambda);
        structural.phase_rad = phases.uniform(0.0, kTwoPi);
        scene.paths.push_back(structural);
    }

    for (const auto &t : scenario.paths.targets)
    {
        PathSpec target;
        target.kind = PathKind::target;
        target.distance_m = t.distance_m;
        target.radial_velocity_mps = t.velocity_mps;
        target.gain_sq = target_gain_sq(budget, t.rcs_m2, t.distance_m, lambda);
        target.phase_rad = phases.uniform(0.0, kTwoPi);
        scene.paths.push_back(target);
    }

    if (scenario.paths.leakage.enabled)
    {
        PathSpec leak;
        leak.kind = PathKind::leakage;
        leak.distance_m = scenario.paths.leakage.delay_s * kSpeedOfLight / 2.0;
        leak.gain_sq = db_to_linear(scenario.paths.leakage.gain_sq_db);
        leak.phase_rad = phases.uniform(0.0, kTwoPi);
        scene.paths.push_back(leak);
    }

    return scene;
}

BeatCube synthesize(const ScenarioConfig &scenario, std::uint64_t seed)
{
    return synthesize_scene(build_scene(scenario, seed), seed);
}

BeatCube add_leakage(BeatCube cube, double gain_sq, double delay_s)
{
    if (!std::isfinite(gain_sq) || gain_sq < 0.0)
        throw std::invalid_argument("add_leakage: gain_sq must be non-negative and finite");
    if (!std::isfinite(delay_s) || delay_s < 0.0)
        throw std::invalid_argument("add_leakage: delay must be non-negative");
    if (gain_sq == 0.0)
        return cube;

    const std::complex<double> amp(std::sqrt(gain_sq), 0.0);
    for (auto &frame : cube.frames)
        add_path_tone(frame, cube.waveform, delay_s, 0.0, amp);
    return cube;
}

} // namespace risloc
