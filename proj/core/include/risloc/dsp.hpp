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

#include <Eigen/Dense>
#include <vector>

namespace risloc {

enum class WindowKind
{
    rectangular,
    hann,
};

struct WindowSpec
{
    WindowKind kind = WindowKind::hann;
    int length = 1;
};

/// Window vector w_A. The Hann variant is w_A(a) = sin^2(a pi / A).
Eigen::VectorXd window_vector(const WindowSpec &spec);

/// DFT sizes for the two frame dimensions; both must cover the frame.
struct DftPlan
{
    int n_dft = 1199;
    int k_dft = 4793;
};

/*!
 * Delay-Doppler spectrum of one windowed, padded frame, sampled on the
 * wrapped grid tau_n' = n' / (S N_dft T_s), nu_k' = k' / (f_c K_dft T).
 * Values are stored delay-major: values(n', k'). The Doppler index is
 * interpreted as centered on zero (upper half of the k' axis maps to
 * negative nu). A min-distance gate marks a leading span of delay bins as
 * excluded from peak searches.
 */
struct DelayDopplerMap
{
    Eigen::MatrixXcd values; // n_dft x k_dft
    double delay_bin_s = 0.0;
    double doppler_bin = 0.0; // in nu units (2v/c)
    int first_searchable_bin = 0;

    int n_dft() const { return static_cast<int>(values.rows()); }
    int k_dft() const { return static_cast<int>(values.cols()); }

    double delay_at(int n) const { return n * delay_bin_s; }

    /// Signed Doppler of column k' under the centered interpretation.
    double doppler_at(int k) const
    {
        const int kd = k_dft();
        const int signed_k = (k <= (kd - 1) / 2) ? k : k - kd;
        return signed_k * doppler_bin;
    }
};

/// Element-wise product of the frame with the outer product of the two
/// window vectors. Lengths must match the frame dimensions.
Eigen::MatrixXcd window_frame(const Eigen::MatrixXcd &frame, const WindowSpec &spec_n,
                              const WindowSpec &spec_k);

/// Places the frame in the top-left block of an n_dft x k_dft matrix of
/// zeros. The plan must be at least as large as the frame.
Eigen::MatrixXcd zero_pad(const Eigen::MatrixXcd &frame, const DftPlan &plan);

/*!
 * 2D spectrum z(tau, nu) = sum_k sum_n Y'[n,k] e^{+j 2 pi S tau n T_s}
 * e^{+j 2 pi f_c nu k T} on the plan's grid — an unnormalized inverse DFT
 * in both dimensions, so a path synthesized with negative-sign exponents
 * peaks at its own (tau_l, nu_l). Matches the literal double sum to better
 * than 1e-9 relative.
 */
DelayDopplerMap delay_doppler_map(const Eigen::MatrixXcd &padded, const Waveform &waveform,
                                  const DftPlan &plan);

/// Excludes delay bins with tau c / 2 < min_distance from peak searches.
DelayDopplerMap gate_min_distance(DelayDopplerMap map, double min_distance_m);

struct PeakLocation
{
    int delay_bin = 0;
    int doppler_bin = 0;
    double tau_s = 0.0;
    double nu = 0.0;
};

/// Grid argmax of |z|^2 over unmasked bins. Ties resolve to the smallest
/// delay, then the smallest (signed) Doppler. Throws if the gate masked
/// every bin.
PeakLocation peak(const DelayDopplerMap &map);

/*!
 * Windowed average power around a detected delay: the mean of |z(tau,
 * nu_m)|^2 over unmasked delay bins within [tau_m - delta, tau_m + delta],
 * with the window evaluated on the wrapped delay axis. Throws if the
 * window contains no searchable bin.
 */
double average_power(const DelayDopplerMap &map, double tau_m, double nu_m, double delta_s);

struct PipelineConfig
{
    WindowKind window_n = WindowKind::hann;
    WindowKind window_k = WindowKind::hann;
    DftPlan plan;
    double delta_s = 0.33e-9;       // half-width of the average-power window
    double min_gate_m = 1.0;        // self-interference gate
    double loopback_delay_s = 1.78e-9;
    int threads = 0;                // 0 = hardware concurrency

    void validate(const Waveform &waveform) const;
};

/// Per-angle detection plus the beam-selection outcome.
struct SweepResult
{
    struct AngleDetection
    {
        double tau_s = 0.0;
        double nu = 0.0;
        double average_power = 0.0;
    };

    std::vector<AngleDetection> per_angle;
    std::size_t selected = 0; // m-hat (0-based)
    Direction aod;            // theta-hat = phi_{m-hat}
    double tau_hat_s = 0.0;
    double nu_hat = 0.0;
    double distance_hat_m = 0.0; // (tau-hat - tau_RB) c / 2
    double velocity_hat_mps = 0.0;
};

/*!
 * Full estimation pipeline: per sweep angle, window -> pad -> 2D spectrum
 * -> gate -> peak -> average power; then the angle with the largest
 * average power is selected (ties to the smallest index) and its
 * delay/Doppler pair is converted to distance and velocity. Angles are
 * processed independently (optionally in parallel); results do not depend
 * on the processing order.
 */
SweepResult estimate(const BeatCube &cube, const PipelineConfig &config);

} // namespace risloc
