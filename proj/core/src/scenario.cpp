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

#include "risloc/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risloc {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

void ScenarioConfig::validate() const
{
    waveform.validate();

    if (!(sweep.az_step_deg > 0.0))
        throw std::invalid_argument("sweep.az_step_deg must be positive");
    if (sweep.az_stop_deg < sweep.az_start_deg)
        throw std::invalid_argument("sweep.az_stop_deg must be >= sweep.az_start_deg");
    if (std::abs(sweep.az_start_deg) > 180.0 || std::abs(sweep.az_stop_deg) > 180.0)
        throw std::invalid_argument("sweep azimuth range outside [-180, 180] degrees");
    if (std::abs(sweep.el_deg) > 90.0)
        throw std::invalid_argument("sweep.el_deg outside [-90, 90] degrees");

    if (!geometry.ue_position.allFinite() || !geometry.ris_position.allFinite())
        throw std::invalid_argument("geometry positions must be finite");
    if (!std::isfinite(geometry.ris_yaw_deg))
        throw std::invalid_argument("geometry.ris_yaw_deg must be finite");
    if (geometry.ris_n_az < 1 || geometry.ris_n_el < 1)
        throw std::invalid_argument("geometry RIS element counts must be >= 1");
    if (!(geometry.ris_element_spacing_m > 0.0))
        throw std::invalid_argument("geometry.ris_element_spacing_m must be positive");
    if ((geometry.ue_position - geometry.ris_position).norm() <= 0.0)
        throw std::invalid_argument("geometry: UE and RIS positions coincide");

    for (auto [v, name] :
         {std::pair{budget.tx_power_dbm, "budget.tx_power_dbm"},
          std::pair{budget.combined_gain_dbi, "budget.combined_gain_dbi"},
          std::pair{budget.ris_loop_factor_db, "budget.ris_loop_factor_db"}})
    {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be finite");
    }
    if (budget.noise_power_dbm && !std::isfinite(*budget.noise_power_dbm))
        throw std::invalid_argument("budget.noise_power_dbm must be finite (or null)");

    if (paths.structural_rcs_m2 < 0.0 || !std::isfinite(paths.structural_rcs_m2))
        throw std::invalid_argument("paths.structural_rcs_m2 must be non-negative");
    if (paths.loopback_delay_s < 0.0 || !std::isfinite(paths.loopback_delay_s))
        throw std::invalid_argument("paths.loopback_delay_s must be non-negative");
    if (!std::isfinite(paths.leakage.gain_sq_db))
        throw std::invalid_argument("paths.leakage.gain_sq_db must be finite");
    if (paths.leakage.delay_s < 0.0 || !std::isfinite(paths.leakage.delay_s))
        throw std::invalid_argument("paths.leakage.delay_s must be non-negative");
    for (const auto &t : paths.targets)
    {
        if (!(t.distance_m > 0.0) || !std::isfinite(t.distance_m))
            throw std::invalid_argument("paths.targets[].distance_m must be positive");
        if (!std::isfinite(t.velocity_mps))
            throw std::invalid_argument("paths.targets[].velocity_mps must be finite");
        if (t.rcs_m2 < 0.0 || !std::isfinite(t.rcs_m2))
            throw std::invalid_argument("paths.targets[].rcs_m2 must be non-negative");
    }

    pipeline_config().validate(waveform);

    // The true AOD must be representable in the boresight convention.
    (void)true_aod();
}

SweepPlan ScenarioConfig::sweep_plan() const
{
    SweepPlan plan;
    const double el = sweep.el_deg * kDegToRad;
    const double step = sweep.az_step_deg;
    // Tolerant upper bound so e.g. -45..45 by 1.5 yields 61 angles.
    for (double az = sweep.az_start_deg; az <= sweep.az_stop_deg + 1e-9 * step; az += step)
        plan.angles.emplace_back(az * kDegToRad, el);
    return plan;
}

ArrayLayout ScenarioConfig::ris_layout() const
{
    return make_upa(geometry.ris_n_az, geometry.ris_n_el, geometry.ris_element_spacing_m);
}

Orientation ScenarioConfig::ris_orientation() const
{
    return Orientation::from_yaw(geometry.ris_yaw_deg * kDegToRad);
}

LinkBudget ScenarioConfig::link_budget() const
{
    LinkBudget b;
    b.tx_power_w = dbm_to_watts(budget.tx_power_dbm);
    b.combined_gain = db_to_linear(budget.combined_gain_dbi);
    b.ris_loop_factor = db_to_linear(budget.ris_loop_factor_db);
    b.noise_power_w = budget.noise_power_dbm ? dbm_to_watts(*budget.noise_power_dbm) : 0.0;
    return b;
}

PipelineConfig ScenarioConfig::pipeline_config() const
{
    PipelineConfig cfg;
    cfg.window_n = pipeline.window;
    cfg.window_k = pipeline.window;
    cfg.plan = DftPlan{pipeline.n_dft, pipeline.k_dft};
    cfg.delta_s = pipeline.delta_s;
    cfg.min_gate_m = pipeline.min_gate_m;
    cfg.loopback_delay_s = paths.loopback_delay_s;
    cfg.threads = pipeline.threads;
    return cfg;
}

double ScenarioConfig::ue_distance_m() const
{
    return (geometry.ue_position - geometry.ris_position).norm();
}

Direction ScenarioConfig::true_aod() const
{
    return direction_from_global(geometry.ue_position, geometry.ris_position,
                                 ris_orientation());
}

} // namespace risloc
