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

#include "risloc/localization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risloc {

Position3 localize(double distance_m, const Direction &aod, const Position3 &ris_pos,
                   const Orientation &orient)
{
    if (!std::isfinite(distance_m) || distance_m < 0.0)
        throw std::invalid_argument("localize: distance must be non-negative");
    return direction_to_global(aod, distance_m, ris_pos, orient);
}

LocalizationEstimate make_estimate(const SweepResult &result, const Position3 &ris_pos,
                                   const Orientation &orient)
{
    LocalizationEstimate est;
    est.distance_m = std::max(result.distance_hat_m, 0.0);
    est.aod = result.aod;
    est.velocity_mps = result.velocity_hat_mps;
    est.position = localize(est.distance_m, est.aod, ris_pos, orient);
    return est;
}

ErrorReport error_report(const LocalizationEstimate &estimate, const GroundTruth &truth)
{
    ErrorReport report;
    report.distance_error_m = std::abs(estimate.distance_m - truth.distance_m);

    const Eigen::Vector3d u_est = unit_vector(estimate.aod);
    const Eigen::Vector3d u_true = unit_vector(truth.aod);
    const double cosang = std::clamp(u_est.dot(u_true), -1.0, 1.0);
    report.angle_error_rad = std::acos(cosang);

    report.position_error_m = (estimate.position - truth.ue_position).norm();
    return report;
}

} // namespace risloc
