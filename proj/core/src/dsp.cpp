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

#include "risloc/dsp.hpp"

#include "risloc/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace risloc {

Eigen::VectorXd window_vector(const WindowSpec &spec)
{
    if (spec.length < 1)
        throw std::invalid_argument("window length must be >= 1");
    Eigen::VectorXd w(spec.length);
    switch (spec.kind)
    {
    case WindowKind::rectangular:
        w.setOnes();
        break;
    case WindowKind::hann:
        for (int a = 0; a < spec.length; ++a)
        {
            const double s = std::sin(a * std::numbers::pi / spec.length);
            w[a] = s * s;
        }
        break;
    }
    return w;
}

Eigen::MatrixXcd window_frame(const Eigen::MatrixXcd &frame, const WindowSpec &spec_n,
                              const WindowSpec &spec_k)
{
    if (spec_n.length != frame.rows() || spec_k.length != frame.cols())
        throw std::invalid_argument("window_frame: window lengths do not match the frame");
    const Eigen::VectorXd wn = window_vector(spec_n);
    const Eigen::VectorXd wk = window_vector(spec_k);
    return frame.cwiseProduct((wn * wk.transpose()).cast<std::complex<double>>());
}

Eigen::MatrixXcd zero_pad(const Eigen::MatrixXcd &frame, const DftPlan &plan)
{
    if (plan.n_dft < frame.rows() || plan.k_dft < frame.cols())
        throw std::invalid_argument("zero_pad: plan smaller than the frame");
    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(plan.n_dft, plan.k_dft);
    padded.topLeftCorner(frame.rows(), frame.cols()) = frame;
    return padded;
}

DelayDopplerMap delay_doppler_map(const Eigen::MatrixXcd &padded, const Waveform &waveform,
                                  const DftPlan &plan)
{
    if (padded.rows() != plan.n_dft || padded.cols() != plan.k_dft)
        throw std::invalid_argument("delay_doppler_map: input shape does not match the plan");

    DelayDopplerMap map;
    map.delay_bin_s = 1.0 / (waveform.slope() * plan.n_dft * waveform.sample_period_s);
    map.doppler_bin = 1.0 / (waveform.carrier_freq_hz * plan.k_dft * waveform.chirp_duration_s);

    auto &transform = SpectrumTransform::shared(plan.n_dft, plan.k_dft);
    transform.backward(padded, map.values);
    return map;
}

DelayDopplerMap gate_min_distance(DelayDopplerMap map, double min_distance_m)
{
    if (!std::isfinite(min_distance_m) || min_distance_m < 0.0)
        throw std::invalid_argument("gate_min_distance: min distance must be non-negative");
    const double min_tau = 2.0 * min_distance_m / kSpeedOfLight;
    int first = 0;
    while (first < map.n_dft() && map.delay_at(first) < min_tau)
        ++first;
    map.first_searchable_bin = std::max(map.first_searchable_bin, first);
    return map;
}

PeakLocation peak(const DelayDopplerMap &map)
{
    const int n_dft = map.n_dft();
    const int k_dft = map.k_dft();
    if (map.first_searchable_bin >= n_dft)
        throw std::runtime_error("peak: the gate masked every delay bin");

    int best_n = -1;
    int best_k = 0;
    double best_power = -1.0;
    for (int k = 0; k < k_dft; ++k)
    {
        const auto col = map.values.col(k);
        for (int n = map.first_searchable_bin; n < n_dft; ++n)
        {
            const double p = std::norm(col[n]);
            if (p > best_power)
            {
                best_power = p;
                best_n = n;
                best_k = k;
            }
            else if (p == best_power && best_n >= 0)
            {
                // Ties: smallest delay, then smallest signed Doppler.
                if (n < best_n ||
                    (n == best_n && map.doppler_at(k) < map.doppler_at(best_k)))
                {
                    best_n = n;
                    best_k = k;
                }
            }
        }
    }
    return {best_n, best_k, map.delay_at(best_n), map.doppler_at(best_k)};
}

double average_power(const DelayDopplerMap &map, double tau_m, double nu_m, double delta_s)
{
    if (!(delta_s > 0.0) || !std::isfinite(delta_s))
        throw std::invalid_argument("average_power: delta must be positive");

    const int n_dft = map.n_dft();
    const int k_dft = map.k_dft();

    // Doppler row nearest to nu_m under the centered interpretation.
    int row_k = 0;
    double best = std::abs(map.doppler_at(0) - nu_m);
    for (int k = 1; k < k_dft; ++k)
    {
        const double d = std::abs(map.doppler_at(k) - nu_m);
        if (d < best)
        {
            best = d;
            row_k = k;
        }
    }

    const double period = n_dft * map.delay_bin_s;
    double sum = 0.0;
    int count = 0;
    for (int n = map.first_searchable_bin; n < n_dft; ++n)
    {
        double dist = std::abs(map.delay_at(n) - tau_m);
        dist = std::min(dist, period - dist); // wrapped delay axis
        if (dist <= delta_s)
        {
            sum += std::norm(map.values(n, row_k));
            ++count;
        }
    }
    if (count == 0)
        throw std::runtime_error("average_power: no searchable delay bin inside the window");
    return sum / count;
}

void PipelineConfig::validate(const Waveform &waveform) const
{
    if (plan.n_dft < waveform.samples_per_chirp)
        throw std::invalid_argument("pipeline.n_dft must be >= samples_per_chirp");
    if (plan.k_dft < waveform.chirps_per_frame)
        throw std::invalid_argument("pipeline.k_dft must be >= chirps_per_frame");
    if (!(delta_s > 0.0) || !std::isfinite(delta_s))
        throw std::invalid_argument("pipeline.delta_s must be positive");
    if (min_gate_m < 0.0 || !std::isfinite(min_gate_m))
        throw std::invalid_argument("pipeline.min_gate_m must be non-negative");
    if (loopback_delay_s < 0.0 || !std::isfinite(loopback_delay_s))
        throw std::invalid_argument("pipeline.loopback_delay_s must be non-negative");
    if (threads < 0)
        throw std::invalid_argument("pipeline.threads must be >= 0");
}

namespace {

SweepResult::AngleDetection process_angle(const Eigen::MatrixXcd &frame,
                                          const Waveform &waveform, const PipelineConfig &cfg)
{
    const WindowSpec spec_n{cfg.window_n, static_cast<int>(frame.rows())};
    const WindowSpec spec_k{cfg.window_k, static_cast<int>(frame.cols())};

    DelayDopplerMap map = delay_doppler_map(zero_pad(window_frame(frame, spec_n, spec_k),
                                                     cfg.plan),
                                            waveform, cfg.plan);
    map = gate_min_distance(std::move(map), cfg.min_gate_m);
    const PeakLocation pk = peak(map);
    const double p_ave = average_power(map, pk.tau_s, pk.nu, cfg.delta_s);
    return {pk.tau_s, pk.nu, p_ave};
}

} // namespace

SweepResult estimate(const BeatCube &cube, const PipelineConfig &config)
{
    cube.validate();
    config.validate(cube.waveform);
    const std::size_t n_angles = cube.n_angles();
    if (n_angles == 0)
        throw std::invalid_argument("estimate: empty cube");

    SweepResult result;
    result.per_angle.resize(n_angles);

    unsigned n_threads = config.threads > 0
                             ? static_cast<unsigned>(config.threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, n_angles);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](unsigned tid)
    {
        try
        {
            for (std::size_t m = tid; m < n_angles; m += n_threads)
                result.per_angle[m] = process_angle(cube.frame(m), cube.waveform, config);
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

    std::size_t best = 0;
    for (std::size_t m = 1; m < n_angles; ++m)
        if (result.per_angle[m].average_power > result.per_angle[best].average_power)
            best = m;

    result.selected = best;
    result.aod = cube.plan.angles.at(best);
    result.tau_hat_s = result.per_angle[best].tau_s;
    result.nu_hat = result.per_angle[best].nu;
    result.distance_hat_m = (result.tau_hat_s - config.loopback_delay_s) * kSpeedOfLight / 2.0;
    result.velocity_hat_mps = result.nu_hat * kSpeedOfLight / 2.0;
    return result;
}

} // namespace risloc
