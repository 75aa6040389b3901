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

#include "risloc/dsp.hpp"
#include "risloc/geometry.hpp"

namespace risloc {

struct LocalizationEstimate
{
    Position3 position{0.0, 0.0, 0.0};
    double distance_m = 0.0;
    Direction aod;
    double velocity_mps = 0.0;
};

struct GroundTruth
{
    Position3 ue_position{0.0, 0.0, 0.0};
    double distance_m = 0.0;
    Direction aod;
    double velocity_mps = 0.0;
};

struct ErrorReport
{
    double distance_error_m = 0.0;
    double angle_error_rad = 0.0; // angular separation of true vs estimated direction
    double position_error_m = 0.0;
};

/// Places the radar at ris_pos + orient * (d * u(aod)).
Position3 localize(double distance_m, const Direction &aod, const Position3 &ris_pos,
                   const Orientation &orient);

/// Bundles a sweep result into a position estimate.
LocalizationEstimate make_estimate(const SweepResult &result, const Position3 &ris_pos,
                                   const Orientation &orient);

ErrorReport error_report(const LocalizationEstimate &estimate, const GroundTruth &truth);

} // namespace risloc
