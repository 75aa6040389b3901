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

#include "risloc/geometry.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace risloc {

struct ScenarioConfig; // scenario.hpp

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/*!
 * FMCW chirp parameters. The slope is B / T; a frame is K chirps of N ADC
 * samples each, taken at the sample period T_s. The wavelength is carried
 * explicitly (it is a rounded quantity in the reference parameter set) and
 * must agree with c / f_c to within 1%.
 */
struct Waveform
{
    double carrier_freq_hz = 60e9;
    double wavelength_m = 0.005;
    double bandwidth_hz = 3.4345e9;
    double chirp_duration_s = 60e-6;
    double sample_period_s = 1e-7;
    int samples_per_chirp = 600; // N
    int chirps_per_frame = 128;  // K

    double slope() const { return bandwidth_hz / chirp_duration_s; }

    /// Throws std::invalid_argument on non-positive parameters, a sampled
    /// sweep exceeding the bandwidth (S * N * T_s > B), or a wavelength
    /// inconsistent with the carrier.
    void validate() const;
};

enum class PathKind
{
    ris_loopback,
    target,
    leakage,
};

/// One propagation path of the beat-signal model. The gain is a squared
/// magnitude (linear power ratio); the complex gain is
/// sqrt(gain_sq) * exp(j phase).
struct PathSpec
{
    PathKind kind = PathKind::target;
    double distance_m = 0.0;        // one-way distance d_l
    double radial_velocity_mps = 0.0;
    double gain_sq = 0.0;
    double phase_rad = 0.0;

    double delay_s() const;   // 2 d / c, plus the loop-back delay for RIS paths
    double doppler() const { return 2.0 * radial_velocity_mps / kSpeedOfLight; }

    /// Extra retransmission latency; only meaningful for ris_loopback paths.
    double loopback_delay_s = 0.0;
};

/// Ordered RIS sweep directions phi_1 ... phi_M.
struct SweepPlan
{
    std::vector<Direction> angles;

    std::size_t size() const { return angles.size(); }
};

/// Transmit/receive power budget, all linear units.
struct LinkBudget
{
    double tx_power_w = 0.1;          // P
    double combined_gain = 3.0;       // G_trx
    double ris_loop_factor = 35743.7; // zeta = L_loss * alpha_RIS
    double noise_power_w = 4.33e-10;  // sigma_N^2 per complex sample

    void validate() const;
};

/*!
 * Beat-signal data cube. frame(m) is the N x K complex matrix for the m-th
 * sweep angle, samples down the rows (n) and chirps across the columns (k);
 * that column-major layout is also the on-disk sample order.
 */
struct BeatCube
{
    std::vector<Eigen::MatrixXcd> frames;
    Waveform waveform;
    SweepPlan plan;

    std::size_t n_angles() const { return frames.size(); }
    Eigen::MatrixXcd &frame(std::size_t m) { return frames.at(m); }
    const Eigen::MatrixXcd &frame(std::size_t m) const { return frames.at(m); }

    /// Shape consistency with the declared waveform/plan plus finiteness.
    void validate() const;
};

/// Radar-equation target gain: P G S_rcs lambda^2 / ((4 pi)^3 d^4).
double target_gain_sq(const LinkBudget &budget, double rcs_m2, double distance_m,
                      double wavelength_m);

/// Active-RIS loopback gain: P G zeta (lambda / (4 pi d0))^4.
double ris_loopback_gain_sq(const LinkBudget &budget, double d0_m, double wavelength_m);

/*!
 * Everything synthesize needs with the randomness already resolved: the
 * path list carries explicit gains and phases. Superposition over paths is
 * exact, which the property tests rely on.
 */
struct SceneModel
{
    Waveform waveform;
    SweepPlan plan;
    ArrayLayout layout;
    Direction aod;         // true AOA/AOD theta at the RIS
    std::vector<PathSpec> paths;
    double noise_power_w = 0.0;
};

/*!
 * Generates the noisy beat cube for the scene. Per (n, k, m) the RIS path
 * contributes gamma_0 times its delay/Doppler tones times the retro array
 * factor a(theta)^T diag(omega_m) a(theta); every other path contributes
 * its tones directly; noise is i.i.d. circular complex Gaussian of the
 * configured power, drawn from the per-angle stream sub_seed(seed, m) so
 * frames may be generated in any order or in parallel.
 */
BeatCube synthesize_scene(const SceneModel &scene, std::uint64_t seed);

/// Builds the SceneModel for a validated scenario (drawing the per-run
/// path phases from the seed) and synthesizes it.
BeatCube synthesize(const ScenarioConfig &scenario, std::uint64_t seed);

/// Scenario -> SceneModel derivation; exposed so harnesses can read the
/// ground truth (paths, AOD) that a given (scenario, seed) produces.
SceneModel build_scene(const ScenarioConfig &scenario, std::uint64_t seed);

/// Adds a static near-zero-delay tone (transmitter leakage) of the given
/// squared gain to every sweep angle of the cube.
BeatCube add_leakage(BeatCube cube, double gain_sq, double delay_s);

} // namespace risloc
